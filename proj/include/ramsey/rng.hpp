#pragma once

#include <cstdint>

namespace ramsey {

// Reproducibility handle: identical (master_seed, stream_id) reproduces any
// sample bit-for-bit, on any platform and at any worker count.
struct Seed {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    Seed() = default;
    Seed(std::uint64_t master, std::uint64_t stream)
        : master_seed(master), stream_id(stream) {}

    bool operator==(const Seed&) const = default;
};

namespace detail {

// SplitMix64 finalizer; full-avalanche 64 -> 64 mix.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

// Counter-style hash of (seed, counter) to a u64. Stateless, so draws are
// order-independent and parallel generation needs no coordination.
inline std::uint64_t hash_counter(const Seed& seed, std::uint64_t counter) {
    std::uint64_t h = detail::mix64(seed.master_seed);
    h = detail::mix64(h ^ detail::mix64(seed.stream_id ^ 0xd6e8feb86659fd93ULL));
    return detail::mix64(h ^ counter);
}

// Uniform in [0, 1), 53 random bits.
inline double uniform01(const Seed& seed, std::uint64_t counter) {
    return static_cast<double>(hash_counter(seed, counter) >> 11) * 0x1.0p-53;
}

// Canonical index of the unordered pair {u, v}, u < v.
inline std::uint64_t pair_index(std::uint64_t u, std::uint64_t v) {
    return v * (v - 1) / 2 + u;
}

// The per-pair uniform variates behind the G(N,p) sampler. Exposed so that
// sweeps can couple samples across p: for p1 <= p2 the p1-graph is an
// edge-subset of the p2-graph under the same seed.
class PairUniforms {
public:
    explicit PairUniforms(Seed seed) : seed_(seed) {}

    double operator()(std::size_t u, std::size_t v) const {
        if (u > v) { auto t = u; u = v; v = t; }
        return uniform01(seed_, pair_index(u, v));
    }

    Seed seed() const { return seed_; }

private:
    Seed seed_;
};

// Small deterministic stream for in-algorithm randomness (restart orders,
// local search moves). Seeded explicitly; never touches global state.
class SmallRng {
public:
    explicit SmallRng(std::uint64_t s) : state_(detail::mix64(s ^ 0xa0761d6478bd642fULL)) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return detail::mix64(state_);
    }
    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        return bound ? next() % bound : 0;
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace ramsey
