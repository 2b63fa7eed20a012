#include "skipcorr/rng.hpp"

#include "skipcorr/common.hpp"
#include "skipcorr/core_stats.hpp"

namespace skipcorr {

namespace {

constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

// Stafford mix 13 finalizer.
std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace

rng_stream::rng_stream(std::uint64_t seed)
    : key_(mix(seed ^ golden)), ctr_(0) {}

rng_stream rng_stream::substream(std::uint64_t tag) const {
    return rng_stream(mix(key_ + golden * (tag + 1)), 0);
}

std::uint64_t rng_stream::next_u64() {
    std::uint64_t x = ctr_ * golden + key_;
    ++ctr_;
    return mix(x);
}

double rng_stream::uniform() {
    std::uint64_t x = next_u64();
    // 53 high bits, offset half a ulp: never exactly 0 or 1.
    return static_cast<double>(x >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double rng_stream::normal() {
    return normal_quantile(uniform());
}

std::uint64_t rng_stream::below(std::uint64_t n) {
    if (n == 0)
        throw stat_error("below(0) is undefined");
    while (true) {
        std::uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo >= n) // cheap acceptance for nearly all draws
            return static_cast<std::uint64_t>(m >> 64);
        std::uint64_t threshold = (0 - n) % n;
        if (lo >= threshold)
            return static_cast<std::uint64_t>(m >> 64);
    }
}

} // namespace skipcorr
