#pragma once

#include <cstdint>
#include <memory>

#include "hybridrng/generator.hpp"
#include "hybridrng/hybrid.hpp"
#include "hybridrng/lcg.hpp"

namespace hybridrng {

enum class GeneratorKind { sha, lcg, lcg_raw, hybrid };

// Everything needed to construct any of the four generator kinds. Fields
// irrelevant to a kind are ignored: sha uses only stream_id, the lcg kinds
// use only lcg/seed.
struct GeneratorConfig {
    GeneratorKind kind = GeneratorKind::hybrid;
    Lcg32Config lcg = super_duper();
    uint32_t seed = 1;
    uint64_t stream_id = 0;
    HybridParams params{};
};

std::unique_ptr<Generator> make_generator(const GeneratorConfig& cfg);

}  // namespace hybridrng
