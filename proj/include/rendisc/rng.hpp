#pragma once

#include <cstdint>
#include <random>

namespace rendisc {

// All randomness in the library flows from a single 64-bit run seed through
// named sub-streams, so that any run is replayable and individual components
// (sampling, per-agent coin flips, ...) can be re-derived in isolation.
//
// Generator: std::mt19937_64 (sequence pinned by the C++ standard).
// Sub-stream seeds are derived with SplitMix64 from (seed, stream, key);
// variates are produced from raw 64-bit draws only, never through
// std::*_distribution, so output is identical across standard libraries.

enum class Stream : std::uint64_t {
    point_sampling = 1,  // sample_uniform_disc
    agent_bits = 2,      // per-agent protocol coin flips, keyed by agent id
    election = 3,        // global-visibility election, keyed by agent id
    strings = 4,         // string experiments, keyed by string index
    bfs_sources = 5,     // sampled-diameter source selection
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, Stream stream, std::uint64_t key = 0) {
    std::uint64_t s = splitmix64(seed ^ (0xa0761d6478bd642full * static_cast<std::uint64_t>(stream)));
    return splitmix64(s ^ (0xe7037ed1a0b428dbull * key));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    Rng(std::uint64_t seed, Stream stream, std::uint64_t key = 0)
        : gen_(substream_seed(seed, stream, key)) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int bit() { return static_cast<int>(gen_() >> 63); }

    // Uniform in [0, m) by rejection; m > 0.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % m;
        std::uint64_t x;
        do { x = gen_(); } while (x >= limit);
        return x % m;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace rendisc
