#pragma once

#include <array>
#include <cstdint>

#include "hybridrng/sha256.hpp"

namespace hybridrng {

// Hash input for block `counter` of stream `stream_id`: exactly 16 bytes,
// stream id in bytes 0-7 and counter in bytes 8-15, both big-endian.
std::array<uint8_t, 16> derive_message(uint64_t stream_id, uint64_t counter);

// Counter-mode SHA-256 word source. Block i (i = 1, 2, 3, ...) is the
// digest of derive_message(stream_id, i) split into eight 32-bit words,
// big-endian by digest byte order. Streams with distinct ids never share
// a hash input.
class CounterBlockSource {
public:
    explicit CounterBlockSource(uint64_t stream_id)
        : stream_id_(stream_id) {}

    // Resumes a source mid-stream. `counter` is the next value to hash;
    // the current block is recomputed from counter-1 when index < 8.
    CounterBlockSource(uint64_t stream_id, uint64_t counter, uint32_t index);

    // Hashes the current counter, advances it, and starts a fresh block.
    // Unread words of the previous block are discarded.
    const std::array<uint32_t, 8>& next_block();

    // Next word of the continuous block stream; hashes lazily, so reading
    // 8k words costs exactly k hash invocations.
    uint32_t next_u32() {
        if (index_ == 8) next_block();
        return block_[index_++];
    }

    uint64_t stream_id() const { return stream_id_; }
    uint64_t counter() const { return counter_; }
    uint32_t index() const { return index_; }
    uint64_t hash_count() const { return counter_ - 1; }

private:
    uint64_t stream_id_;
    uint64_t counter_ = 1;
    std::array<uint32_t, 8> block_{};
    uint32_t index_ = 8;  // 8 = exhausted; the first read hashes counter 1
};

}  // namespace hybridrng
