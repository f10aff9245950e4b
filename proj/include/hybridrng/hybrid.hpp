#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hybridrng/counter_source.hpp"
#include "hybridrng/generator.hpp"
#include "hybridrng/lcg.hpp"

namespace hybridrng {

// Combining parameters: `size` (k) cryptographic words are buffered and
// each is XORed into `repetition` (n) output words before the buffer is
// refreshed. Both must be >= 1; the pure-SHA and pure-LCG streams are
// separate generators, not degenerate parameter choices.
struct HybridParams {
    uint64_t size = 16;
    uint64_t repetition = 128;
};

// Recommended buffer size for a given LCG: 32 for glibc rand, 16 otherwise.
uint64_t default_size(const Lcg32Config& cfg);

// Named repetition presets: conservative=16, balanced=128, fast=256.
std::optional<uint64_t> repetition_preset(std::string_view name);

// The combined generator. Output word t (0-based) is
//
//   buffer_word(floor(t/(k*n))*k + t mod k) XOR lcg_word(t)
//
// where buffer words are drawn from the continuous counter-mode SHA-256
// word stream, so leftover words of a digest block carry into the next
// buffer and nothing is discarded.
class HybridGenerator final : public Generator {
public:
    HybridGenerator(HybridParams params, const Lcg32Config& lcg_config,
                    uint32_t lcg_seed, uint64_t stream_id);

    uint32_t next_u32() override;
    void fill(std::span<uint32_t> out) override;
    GeneratorDesc desc() const override;

    const HybridParams& params() const { return params_; }
    const Lcg32Config& lcg_config() const { return lcg_config_; }
    uint64_t stream_id() const { return crypto_.stream_id(); }

    // Work counters backing the fixed-work bench checks.
    uint64_t hash_count() const { return crypto_.hash_count(); }
    uint64_t lcg_step_count() const { return lcg_steps_; }

    // Byte-exact state snapshot; layout documented in docs/formats.md.
    std::vector<uint8_t> checkpoint() const;
    static HybridGenerator restore(std::span<const uint8_t> bytes,
                                   const Lcg32Config& lcg_config);

private:
    HybridGenerator(HybridParams params, const Lcg32Config& lcg_config,
                    uint32_t lcg_seed, CounterBlockSource crypto, bool fill_buffer);
    void refill();

    HybridParams params_;
    Lcg32Config lcg_config_;
    CounterBlockSource crypto_;
    std::vector<uint32_t> buffer_;
    uint64_t pass_ = 0;  // completed passes over the current buffer; == n means refresh pending
    uint64_t pos_ = 0;   // position within the current pass
    Lcg32State lcg_state_;
    uint64_t lcg_steps_ = 0;
};

// Loop-naive realization of the combining schedule, kept independent of
// HybridGenerator as its oracle. Output length equals |lcg_words|; throws
// std::invalid_argument when crypto_words is too short
// (fewer than k * ceil(|lcg_words| / (k*n)) words).
std::vector<uint32_t> reference_combine(HybridParams params,
                                        std::span<const uint32_t> crypto_words,
                                        std::span<const uint32_t> lcg_words);

// `count` generators: generator j uses stream_id base_stream_id + j and
// LCG seed base_lcg_seed + j (seed wraps mod 2^32). Throws on stream-id
// wraparound. Streams share nothing and may run on distinct threads.
std::vector<HybridGenerator> make_parallel_streams(HybridParams params,
                                                   const Lcg32Config& lcg_config,
                                                   uint32_t base_lcg_seed,
                                                   uint64_t base_stream_id,
                                                   uint64_t count);

// Pure counter-mode SHA-256 word stream (baseline quality).
class ShaGenerator final : public Generator {
public:
    explicit ShaGenerator(uint64_t stream_id) : src_(stream_id) {}

    uint32_t next_u32() override { return src_.next_u32(); }
    void fill(std::span<uint32_t> out) override;
    GeneratorDesc desc() const override { return {"sha", "", 0, 0}; }

    uint64_t hash_count() const { return src_.hash_count(); }

private:
    CounterBlockSource src_;
};

// Pure LCG word stream with the two-step high-16-bit concatenation.
class LcgGenerator final : public Generator {
public:
    LcgGenerator(const Lcg32Config& cfg, uint32_t seed) : cfg_(cfg), state_{seed} {}

    uint32_t next_u32() override {
        auto [word, s] = lcg_next_u32(state_, cfg_);
        state_ = s;
        steps_ += 2;
        return word;
    }
    void fill(std::span<uint32_t> out) override;
    GeneratorDesc desc() const override { return {"lcg", cfg_.name, 0, 0}; }

    uint64_t step_count() const { return steps_; }

private:
    Lcg32Config cfg_;
    Lcg32State state_;
    uint64_t steps_ = 0;
};

// Raw LCG state stream, one step per word and no high-bit trick. Exposes
// the short-period low-order bits the trick exists to mask.
class LcgRawStateGenerator final : public Generator {
public:
    LcgRawStateGenerator(const Lcg32Config& cfg, uint32_t seed) : cfg_(cfg), state_{seed} {}

    uint32_t next_u32() override {
        state_ = lcg_step(state_, cfg_);
        ++steps_;
        return state_.x;
    }
    void fill(std::span<uint32_t> out) override;
    GeneratorDesc desc() const override { return {"lcg-raw", cfg_.name, 0, 0}; }

    uint64_t step_count() const { return steps_; }

private:
    Lcg32Config cfg_;
    Lcg32State state_;
    uint64_t steps_ = 0;
};

inline ShaGenerator pure_sha_generator(uint64_t stream_id) {
    return ShaGenerator(stream_id);
}

inline LcgGenerator pure_lcg_generator(const Lcg32Config& cfg, uint32_t seed) {
    return LcgGenerator(cfg, seed);
}

}  // namespace hybridrng
