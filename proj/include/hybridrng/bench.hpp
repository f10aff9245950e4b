#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hybridrng/generator.hpp"
#include "hybridrng/hybrid.hpp"
#include "hybridrng/lcg.hpp"

namespace hybridrng {

using GeneratorFactory = std::function<std::unique_ptr<Generator>()>;

struct BenchRecord {
    GeneratorDesc desc;
    uint64_t words = 0;
    uint32_t trials = 0;
    double mean_seconds = 0.0;
    double throughput = 0.0;  // words per second
    std::vector<double> trial_seconds;
    uint32_t sink = 0;  // XOR fold of every produced word; defeats elision
};

// Times `trials` fresh generators each producing `words` words, after one
// discarded warm-up trial. Requires words >= 2^20 and trials >= 3.
// Single-threaded by contract.
BenchRecord measure_throughput(const GeneratorFactory& factory, uint64_t words,
                               uint32_t trials);

// One record per repetition value (ascending, non-empty) for the combined
// generator at fixed size.
std::vector<BenchRecord> sweep_repetition(const Lcg32Config& lcg_config,
                                          uint64_t size,
                                          std::span<const uint64_t> repetitions,
                                          uint64_t words, uint32_t trials);

// CSV with header kind,lcg,k,n,words,trials,mean_seconds,throughput,sink.
std::string bench_csv(std::span<const BenchRecord> records);

struct ParallelBenchRecord {
    uint32_t streams = 0;
    uint64_t words_per_stream = 0;
    uint32_t trials = 0;
    double mean_seconds = 0.0;         // wall time for all streams together
    double total_throughput = 0.0;     // streams * words_per_stream / mean_seconds
    double per_stream_throughput = 0.0;
    uint32_t sink = 0;
};

// Aggregate throughput of `streams` independent hybrid streams running on
// `streams` threads, derived from one base seed/stream id.
ParallelBenchRecord measure_parallel_throughput(HybridParams params,
                                                const Lcg32Config& lcg_config,
                                                uint32_t base_lcg_seed,
                                                uint64_t base_stream_id,
                                                uint32_t streams,
                                                uint64_t words_per_stream,
                                                uint32_t trials);

}  // namespace hybridrng
