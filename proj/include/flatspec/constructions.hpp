#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "flatspec/flat.hpp"
#include "flatspec/point_set.hpp"
#include "flatspec/rng.hpp"
#include "flatspec/version.hpp"

namespace flatspec {

// All points whose n-digit binary word is smaller than m. Decomposes into
// s2(m) disjoint flats whose dimensions are the support of m.
inline PointSet lexicographic(int n, std::uint64_t m) {
    check_dim(n, kMaxPointSetDim, "lexicographic");
    if (m > (std::uint64_t{1} << n))
        throw std::invalid_argument("lexicographic: m exceeds 2^n");
    PointSet s(n);
    for (std::uint64_t p = 0; p < m; ++p) s.insert(static_cast<Point>(p));
    return s;
}

namespace detail {

inline double ln_binomial(double n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(n - static_cast<double>(k) + 1.0);
}

// ln of the constant factor shared by the evasive size bound and K(k,c,q):
// (1/c) * ln( 2 e^{f(q)} (c+1) binom(q^k, c+1) ), f(2)=2/3, f(q)=1/(q-2).
inline double ln_evasive_denominator(int k, int c, int q) {
    const double e_exponent = (q == 2) ? 2.0 / 3.0 : 1.0 / (q - 2);
    const double qk = std::pow(static_cast<double>(q), k);
    return (std::log(2.0) + e_exponent + std::log(c + 1.0) + ln_binomial(qk, c + 1)) / c;
}

} // namespace detail

// K(k,c) = c/(c+1) * 2^{k(k+1)/c} * (2 e^{2/3} (c+1) binom(2^k, c+1))^{-1/c},
// with e^{1/(q-2)} replacing e^{2/3} for q > 2.
inline double K_constant(int k, int c, int q = 2) {
    if (k < 1) throw std::invalid_argument("K_constant: k must be positive");
    if (c < k + 1) throw std::invalid_argument("K_constant: need c >= k+1");
    if (q < 2) throw std::invalid_argument("K_constant: q must be at least 2");
    if (std::pow(static_cast<double>(q), k) < static_cast<double>(c) + 1.0)
        throw std::invalid_argument("K_constant: c+1 exceeds q^k, the binomial vanishes");
    const double ln2 = std::log(2.0);
    const double lnk = std::log(static_cast<double>(c) / (c + 1.0)) +
                       (static_cast<double>(k) * (k + 1.0) / c) * ln2 -
                       detail::ln_evasive_denominator(k, c, q);
    return std::exp(lnk);
}

// Sample size maximizing the expected number of surviving points:
// 2^{n(1-k/c)} * 2^{k(k+1)/c} * (2 e^{2/3} (c+1) binom(2^k, c+1))^{-1/c},
// floored and clamped to [1, 2^n].
inline std::uint64_t evasive_sample_size(int n, int k, int c) {
    const double ln2 = std::log(2.0);
    const double lnm = n * (1.0 - static_cast<double>(k) / c) * ln2 +
                       (static_cast<double>(k) * (k + 1.0) / c) * ln2 -
                       detail::ln_evasive_denominator(k, c, 2);
    const double m = std::floor(std::exp(lnm));
    const double cap = std::ldexp(1.0, n);
    return static_cast<std::uint64_t>(std::max(1.0, std::min(m, cap)));
}

struct EvasiveParams {
    int n = 0;
    int k = 0;
    int c = 0; // must satisfy c >= k+1; below that a (k,c)-evasive set has at most c points
    std::uint64_t seed = kDefaultSeed;
    int retries = 8;
};

struct EvasiveResult {
    PointSet set;
    std::uint64_t sample_size;  // points drawn before alteration
    double expected_size_floor; // c/(c+1) * sample_size - 1
    int attempts;
    bool floor_met;
};

struct EvasiveCheck {
    bool evasive;
    std::optional<Flat> witness; // a k-flat with more than c points when not evasive
};

// Exhaustive certification: scans every k-flat and stops at the first one
// holding more than c points of S.
inline EvasiveCheck is_evasive(const PointSet& s, int k, int c) {
    if (c < 0) throw std::invalid_argument("is_evasive: c must be non-negative");
    std::optional<Flat> witness;
    FlatEnumerator en(s.dim(), k);
    en.for_each_while([&](const Flat& f) {
        std::uint64_t cnt = 0;
        f.for_each_point([&](Point p) { cnt += s.contains(p) ? 1 : 0; });
        if (cnt > static_cast<std::uint64_t>(c)) {
            witness = f;
            return false;
        }
        return true;
    });
    return {!witness.has_value(), std::move(witness)};
}

namespace detail {

// Violating spans: affine spans of (k+1)-point tuples of S holding at least
// c+1 points of S. A k-flat with more than c points of S always contains
// such a span, so clearing these clears all violations.
inline std::set<Flat> violating_spans(const PointSet& s, int k, int c) {
    std::set<Flat> spans;
    const auto pts = s.points();
    const int m = static_cast<int>(pts.size());
    if (m < c + 1 || m < k + 1) return spans;
    std::vector<int> idx(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) idx[i] = i;
    std::vector<Point> tuple(static_cast<std::size_t>(k) + 1);
    while (true) {
        for (int i = 0; i <= k; ++i) tuple[i] = pts[idx[i]];
        Flat span = Flat::affine_span(s.dim(), tuple);
        std::uint64_t cnt = 0;
        span.for_each_point([&](Point p) { cnt += s.contains(p) ? 1 : 0; });
        if (cnt >= static_cast<std::uint64_t>(c) + 1) spans.insert(span);
        // next (k+1)-combination of [0, m)
        int i = k;
        while (i >= 0 && idx[i] == m - (k + 1) + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return spans;
}

// Removes points until no k-flat holds more than c points: each round drops
// the point lying in the most violating spans (ties: smallest word).
inline void alter_to_evasive(PointSet& s, int k, int c) {
    while (s.size() > static_cast<std::uint64_t>(c)) {
        const auto spans = violating_spans(s, k, c);
        if (spans.empty()) return;
        Point worst = 0;
        std::uint64_t worst_count = 0;
        s.for_each_point([&](Point p) {
            std::uint64_t covered = 0;
            for (const Flat& f : spans) covered += f.contains(p) ? 1 : 0;
            if (covered > worst_count) {
                worst_count = covered;
                worst = p;
            }
        });
        s.erase(worst);
    }
}

} // namespace detail

// Randomized alteration: draw sample_size points uniformly, then delete
// points until the set is (k,c)-evasive. Retries with fresh substreams while
// the result stays below the expected-size floor; never returns an
// uncertified set.
inline EvasiveResult evasive_random(const EvasiveParams& params) {
    const int n = params.n, k = params.k, c = params.c;
    check_dim(n, kMaxEnumerationDim, "evasive_random");
    if (k < 1 || k >= n) throw std::invalid_argument("evasive_random: need 1 <= k < n");
    if (c < k + 1) throw std::invalid_argument("evasive_random: need c >= k+1");
    if ((std::uint64_t{1} << k) < static_cast<std::uint64_t>(c) + 1)
        throw std::invalid_argument("evasive_random: c+1 exceeds 2^k");
    if (params.retries < 1) throw std::invalid_argument("evasive_random: retries must be positive");

    const std::uint64_t m_star = evasive_sample_size(n, k, c);
    const double floor_size = static_cast<double>(c) / (c + 1) * static_cast<double>(m_star) - 1.0;

    SplitMix64 root(params.seed);
    std::optional<PointSet> best;
    int attempts = 0;
    for (int round = 0; round < params.retries; ++round) {
        SplitMix64 rng = root.fork(static_cast<std::uint64_t>(round));
        auto pts = random_subset(std::uint64_t{1} << n, m_star, rng);
        PointSet s = PointSet::from_points(n, pts);
        detail::alter_to_evasive(s, k, c);
        ++attempts;
        if (!best || s.size() > best->size()) best = s;
        if (static_cast<double>(best->size()) >= floor_size) break;
    }
    const bool met = static_cast<double>(best->size()) >= floor_size;
    return {std::move(*best), m_star, floor_size, attempts, met};
}

enum class CombineMode { kUnion, kDifference };

struct CombinedSet {
    CombineMode mode;
    std::uint64_t base_size; // lexicographic part
    Point translate;
    PointSet evasive_part; // kept points (union) or deleted points (difference)
    PointSet result;
    EvasiveResult generation;
};

// w + L_m minimizing overlap with the evasive set, then disjoint union.
// Some translate keeps at least a (2^n - m)/2^n fraction of the evasive set.
inline CombinedSet combine_union(int n, std::uint64_t m, int k, int c, std::uint64_t seed) {
    if (m > (std::uint64_t{1} << n)) throw std::invalid_argument("combine_union: m exceeds 2^n");
    EvasiveResult ev = evasive_random({n, k, c, seed});
    const auto evasive_pts = ev.set.points();
    const std::uint64_t universe = std::uint64_t{1} << n;
    Point best_w = 0;
    std::uint64_t best_overlap = ~std::uint64_t{0};
    for (std::uint64_t w = 0; w < universe; ++w) {
        std::uint64_t overlap = 0;
        for (Point p : evasive_pts) overlap += ((p ^ w) < m) ? 1 : 0;
        if (overlap < best_overlap) {
            best_overlap = overlap;
            best_w = static_cast<Point>(w);
        }
    }
    PointSet translate = lexicographic(n, m).translated(best_w);
    PointSet kept = ev.set.subtract(translate);
    // averaging bound: max over w keeps at least |S| (2^n - m) / 2^n
    if (kept.size() * universe < ev.set.size() * (universe - m))
        throw std::logic_error("combine_union: averaging bound violated");
    PointSet result = translate.unite(kept);
    return {CombineMode::kUnion, m, best_w, std::move(kept), std::move(result), std::move(ev)};
}

// w + L_m maximizing overlap with the evasive set, then removal.
inline CombinedSet combine_difference(int n, std::uint64_t m, int k, int c, std::uint64_t seed) {
    if (m > (std::uint64_t{1} << n)) throw std::invalid_argument("combine_difference: m exceeds 2^n");
    EvasiveResult ev = evasive_random({n, k, c, seed});
    const auto evasive_pts = ev.set.points();
    const std::uint64_t universe = std::uint64_t{1} << n;
    Point best_w = 0;
    std::uint64_t best_overlap = 0;
    bool first = true;
    for (std::uint64_t w = 0; w < universe; ++w) {
        std::uint64_t overlap = 0;
        for (Point p : evasive_pts) overlap += ((p ^ w) < m) ? 1 : 0;
        if (first || overlap > best_overlap) {
            first = false;
            best_overlap = overlap;
            best_w = static_cast<Point>(w);
        }
    }
    PointSet translate = lexicographic(n, m).translated(best_w);
    PointSet removed = ev.set.intersect(translate);
    if (removed.size() * universe < ev.set.size() * m)
        throw std::logic_error("combine_difference: averaging bound violated");
    PointSet result = translate.subtract(removed);
    return {CombineMode::kDifference, m, best_w, std::move(removed), std::move(result), std::move(ev)};
}

} // namespace flatspec
