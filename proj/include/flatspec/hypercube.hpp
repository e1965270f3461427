#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatspec/bigint.hpp"
#include "flatspec/numerals.hpp"
#include "flatspec/point_set.hpp"

namespace flatspec {

// Edges of Q_n inside T: Hamming-distance-1 pairs, counted by popcount of
// single-bit xors; no graph is materialized.
inline std::uint64_t induced_edges(int n, const PointSet& t) {
    if (n != t.dim()) throw std::invalid_argument("induced_edges: dimension mismatch");
    if (n > kMaxCubeDim) throw std::invalid_argument("induced_edges: dimension exceeds the cube cap");
    std::uint64_t twice = 0;
    t.for_each_point([&](Point p) {
        for (int i = 0; i < n; ++i) twice += t.contains(p ^ (Point{1} << i)) ? 1 : 0;
    });
    return twice / 2;
}

// e(T, complement) = n|T| - 2 e(T).
inline std::uint64_t crossing_edges(int n, const PointSet& t) {
    return static_cast<std::uint64_t>(n) * t.size() - 2 * induced_edges(n, t);
}

struct CubeCut {
    int n = 0;
    PointSet side_a;
    std::uint64_t internal_edges_a = 0;
    std::uint64_t crossing = 0;
};

inline CubeCut make_cube_cut(int n, const PointSet& t) {
    CubeCut c{n, t, induced_edges(n, t), 0};
    c.crossing = static_cast<std::uint64_t>(n) * t.size() - 2 * c.internal_edges_a;
    return c;
}

// Minimum of e(T, complement) over all |T| = t: n t - 2 Psi(t).
inline BigInt min_cut_size(int n, std::uint64_t t) {
    if (n < 1) throw std::invalid_argument("min_cut_size: n must be positive");
    if (t < 1 || t > (std::uint64_t{1} << n) - 1)
        throw std::invalid_argument("min_cut_size: need 1 <= t <= 2^n - 1");
    return BigInt(n) * t - 2 * psi(t);
}

// Every cut with both sides of size at least 2^d crosses at least 2^d (n-d)
// edges.
inline std::uint64_t cut_lower_bound(int n, int d) {
    if (n < 1) throw std::invalid_argument("cut_lower_bound: n must be positive");
    if (d < 0 || d > n - 1) throw std::invalid_argument("cut_lower_bound: need 0 <= d <= n-1");
    return (std::uint64_t{1} << d) * static_cast<std::uint64_t>(n - d);
}

// Cut of a disjoint union of k copies of Q_n, given side A per copy.
// Preconditions: every part nonempty with |A_i| <= 2^{n-1}, total size at
// least 2^d, and d <= n-2. Returns whether the crossing count reaches
// 2^d (n-d); precondition violations are itemized in the thrown message.
inline bool multi_cube_cut_check(int n, int k, int d, std::span<const PointSet> parts) {
    std::string problems;
    auto complain = [&](const std::string& p) {
        if (!problems.empty()) problems += "; ";
        problems += p;
    };
    if (k < 1) complain("k must be positive");
    if (static_cast<int>(parts.size()) != k) complain("expected exactly k parts");
    if (d < 0 || d > n - 2) complain("need 0 <= d <= n-2");
    std::uint64_t total_size = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& a = parts[i];
        const std::string tag = "part " + std::to_string(i);
        if (a.dim() != n) complain(tag + ": wrong ambient dimension");
        else if (a.empty()) complain(tag + ": empty side");
        else if (a.size() > (std::uint64_t{1} << (n - 1))) complain(tag + ": side larger than 2^{n-1}");
        total_size += a.size();
    }
    if (problems.empty() && total_size < (std::uint64_t{1} << d))
        complain("total side size below 2^d");
    if (!problems.empty()) throw std::invalid_argument("multi_cube_cut_check: " + problems);

    std::uint64_t total_crossing = 0;
    for (const auto& a : parts) total_crossing += crossing_edges(n, a);
    return total_crossing >= cut_lower_bound(n, d);
}

} // namespace flatspec
