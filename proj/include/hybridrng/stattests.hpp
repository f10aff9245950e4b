#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybridrng/generator.hpp"

namespace hybridrng {

enum class Verdict { pass, fail };

inline constexpr double kDefaultAlpha = 1e-3;

// Two-sided suspect rule, flagging both tails: fail iff p < alpha or
// p > 1 - alpha. An exact p of 1.0 produced by a statistic of exactly
// zero is treated as the interior value 1-eps and passes.
Verdict judge(double p_value, double alpha);

struct TestReport {
    std::string test_name;
    std::string params;
    double statistic = 0.0;
    double p_value = 0.0;
    uint64_t n_samples = 0;
    Verdict verdict = Verdict::pass;
};

// Packed bit sequence.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(uint64_t reserve_bits) { blocks_.reserve((reserve_bits + 63) / 64); }

    void push_back(bool bit) {
        const uint64_t slot = nbits_ & 63;
        if (slot == 0) blocks_.push_back(0);
        blocks_.back() |= uint64_t(bit) << slot;
        ++nbits_;
    }

    uint64_t size() const { return nbits_; }
    bool bit(uint64_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }

    uint64_t count_ones() const;
    // Number of positions i in [1, size) with bit(i) != bit(i-1).
    uint64_t count_transitions() const;

private:
    std::vector<uint64_t> blocks_;
    uint64_t nbits_ = 0;
};

// All 32 bits of each word, most significant first.
BitVec word_bits(std::span<const uint32_t> words);
// One chosen bit of each word.
BitVec bit_plane(std::span<const uint32_t> words, uint32_t bit);

// Frequency test: z = (2*ones - n) / sqrt(n). Requires >= 100 bits.
TestReport monobit(const BitVec& bits, double alpha = kDefaultAlpha);

// Runs test with the observed ones proportion plugged into the reference
// normal. Requires >= 100 bits; degenerate constant input yields p = 0.
TestReport runs_test(const BitVec& bits, double alpha = kDefaultAlpha);

// Chi-square on non-overlapping pairs of cells, where a word's cell is its
// low `bits_per_cell` bits (1..16). Requires at least 5 expected
// occupants per pair cell, i.e. floor(n/2) >= 5 * 4^bits_per_cell.
TestReport serial_pairs_chisq(std::span<const uint32_t> words,
                              uint32_t bits_per_cell,
                              double alpha = kDefaultAlpha);

// Gap test over [lo, hi) in [0,1): chi-square on the distribution of gap
// lengths between visits, geometric under the null. Requires an expected
// visit count n*(hi-lo) >= 100.
TestReport gap_test(std::span<const uint32_t> words, double lo, double hi,
                    double alpha = kDefaultAlpha);

// Birthday spacings: m birthdays per replication in d days (d a power of
// two <= 2^32, taken from the high bits of each word), duplicate spacings
// summed over floor(n/m) replications and referred to the Poisson law with
// mean lambda = m^3/(4d) per replication. Requires lambda in [1, 16] and
// at least 8 replications.
TestReport birthday_spacings(std::span<const uint32_t> words, uint64_t m,
                             uint64_t d, double alpha = kDefaultAlpha);

// Sample autocorrelation of the words mapped to [0,1) at the given lag,
// z = r * sqrt(n - lag). Requires n >= 10^4 and 1 <= lag < n/2.
TestReport lag_autocorrelation(std::span<const uint32_t> words, uint64_t lag,
                               double alpha = kDefaultAlpha);

struct BatteryInstance {
    std::string test_name;
    std::string params;
};

// Frozen, ordered battery composition. Failure counts are comparable only
// between runs with equal manifest versions; see docs/battery.md.
inline constexpr std::string_view kBatteryVersion = "battery-v1";
std::span<const BatteryInstance> battery_manifest();
std::string battery_manifest_text();

struct BatteryReport {
    GeneratorDesc generator;
    std::string manifest_version;
    double alpha = kDefaultAlpha;
    uint64_t n_words = 0;
    std::vector<TestReport> tests;
    uint64_t failure_count = 0;
    bool complete = false;
};

// Draws n_words from the source once and runs every manifest instance on
// that sample, in manifest order. Requires n_words >= 2^20. A per-test
// error aborts the run and leaves the report flagged incomplete.
BatteryReport run_battery(Generator& source, uint64_t n_words,
                          double alpha = kDefaultAlpha);

// CSV with header test_name,params,statistic,p_value,verdict.
std::string battery_csv(const BatteryReport& report);

}  // namespace hybridrng
