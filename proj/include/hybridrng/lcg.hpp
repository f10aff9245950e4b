#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hybridrng {

// 32-bit linear congruential generator with the modulus fixed at 2^32:
//
//   x' = multiplier * x + addend  (mod 2^32)
//
// All arithmetic wraps silently; no wider intermediate is observable.
struct Lcg32Config {
    std::string name;
    uint32_t multiplier = 0;
    uint32_t addend = 0;
};

struct Lcg32State {
    uint32_t x = 1;
};

// Built-in configurations. All three have an odd addend and a multiplier
// congruent to 1 mod 4, so the raw state sequence has full period 2^32
// from any seed.
const Lcg32Config& super_duper();   // 69069, 1
const Lcg32Config& glibc_rand();    // 1103515245, 12345
const Lcg32Config& borland_rand();  // 22695477, 1

std::span<const Lcg32Config> builtin_lcgs();
std::optional<Lcg32Config> lcg_by_name(std::string_view name);

inline Lcg32State lcg_step(Lcg32State s, const Lcg32Config& cfg) {
    return {s.x * cfg.multiplier + cfg.addend};
}

struct LcgWord {
    uint32_t word;
    Lcg32State state;
};

// Advances the state twice and concatenates the 16 high-order bits of each
// new state: the first step fills the high half of the output word. Low
// state bits never reach the output; they have much shorter periods.
inline LcgWord lcg_next_u32(Lcg32State s, const Lcg32Config& cfg) {
    const Lcg32State s1 = lcg_step(s, cfg);
    const Lcg32State s2 = lcg_step(s1, cfg);
    return {(s1.x & 0xFFFF0000u) | (s2.x >> 16), s2};
}

// Least period p <= max_steps with which bit `bit_index` of the raw state
// sequence repeats from the seed onward, or nullopt when no such period
// exists within max_steps. Exact: bit b depends only on the low b+1 state
// bits, which evolve autonomously, so agreement over a window of
// 2^(b+1) + p steps proves agreement forever.
//
// Requires max_steps >= 2 and bit_index <= 31. Rejects requests whose
// verification window exceeds 2^27 bits (large bit_index / max_steps
// combinations); this is a desk-scale diagnostic, not a cycle finder.
std::optional<uint64_t> bit_period(const Lcg32Config& cfg, uint32_t seed,
                                   uint32_t bit_index, uint64_t max_steps);

}  // namespace hybridrng
