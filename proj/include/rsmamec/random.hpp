#pragma once

#include <cstdint>

namespace rsmamec {

// Counter-based random substream. Each (master seed, index) pair yields an
// independent SplitMix64 sequence, so trial i sees the same variates no
// matter which worker runs it.
class Substream {
public:
    Substream(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t next();

    // Uniform on the open interval (0, 1) with 53-bit resolution.
    double uniform_open();

private:
    std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace rsmamec
