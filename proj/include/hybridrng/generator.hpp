#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace hybridrng {

// Descriptor carried into battery and bench reports.
struct GeneratorDesc {
    std::string kind;  // "sha" | "lcg" | "lcg-raw" | "hybrid"
    std::string lcg;   // LCG name; empty for sha
    uint64_t k = 0;    // hybrid only
    uint64_t n = 0;    // hybrid only

    std::string to_string() const;
};

// Single-owner 32-bit word stream. Instances are cheap values; use one per
// thread, never one across threads.
class Generator {
public:
    virtual ~Generator() = default;

    virtual uint32_t next_u32() = 0;

    // Bulk fill, equivalent to one next_u32() call per element. Overridden
    // by concrete generators with tight loops; semantics are identical.
    virtual void fill(std::span<uint32_t> out) {
        for (auto& w : out) w = next_u32();
    }

    virtual GeneratorDesc desc() const = 0;
};

}  // namespace hybridrng
