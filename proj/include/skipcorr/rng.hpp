#pragma once

#include <cstdint>

namespace skipcorr {

// Counter-based generator: output b depends only on (key, counter), so any
// replicate can be regenerated in isolation and parallel schedules cannot
// change the stream. Substreams are derived by hashing a tag into the key;
// the tree master -> replication -> pair -> bootstrap keeps every unit of
// work on its own independent stream.
class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed);

    rng_stream substream(std::uint64_t tag) const;

    std::uint64_t next_u64();

    // Uniform on (0, 1); never returns an endpoint.
    double uniform();

    // Standard normal via the inverse CDF, one uniform per deviate.
    double normal();

    // Unbiased integer in [0, n), Lemire multiply-shift with rejection.
    std::uint64_t below(std::uint64_t n);

private:
    rng_stream(std::uint64_t key, std::uint64_t ctr) : key_(key), ctr_(ctr) {}

    std::uint64_t key_;
    std::uint64_t ctr_;
};

} // namespace skipcorr
