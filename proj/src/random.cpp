#include "rsmamec/random.hpp"

namespace rsmamec {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Substream::Substream(std::uint64_t master_seed, std::uint64_t index)
    : state_(mix64(master_seed ^ mix64(index * kGolden + 0xD1B54A32D192ED03ULL)))
{
}

std::uint64_t Substream::next()
{
    state_ += kGolden;
    return mix64(state_);
}

double Substream::uniform_open()
{
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(next() >> 11) + 0.5) * kScale;
}

}  // namespace rsmamec
