#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace hybridrng {

using Sha256Digest = std::array<uint8_t, 32>;

// Incremental FIPS 180-4 SHA-256.
class Sha256 {
public:
    Sha256() { reset(); }

    void reset();
    void update(std::span<const uint8_t> data);
    // Pads, runs the final compression and returns the digest. The object
    // must be reset() before reuse.
    Sha256Digest finish();

private:
    void compress(const uint8_t block[64]);

    std::array<uint32_t, 8> state_{};
    std::array<uint8_t, 64> buf_{};
    uint64_t total_bytes_ = 0;
    uint32_t buf_len_ = 0;
};

// One-shot digest.
Sha256Digest sha256(std::span<const uint8_t> message);

}  // namespace hybridrng
