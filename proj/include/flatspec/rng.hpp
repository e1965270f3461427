#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace flatspec {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937_64 plus
// std:: distributions because the distributions are implementation-defined;
// this generator replays bit-for-bit on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Derives an independent stream, e.g. one per retry or per worker.
    SplitMix64 fork(std::uint64_t stream) {
        SplitMix64 mix(state_ ^ (0x5851f42d4c957f2dull * (stream + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

// Uniform m-subset of [0, universe) via partial Fisher-Yates; ascending output.
inline std::vector<std::uint32_t> random_subset(std::uint64_t universe, std::uint64_t m,
                                                SplitMix64& rng) {
    if (m > universe) throw std::invalid_argument("random_subset: m exceeds universe");
    std::vector<std::uint32_t> idx(universe);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t j = i + rng.below(universe - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(m);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace flatspec
