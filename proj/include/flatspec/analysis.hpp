#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "flatspec/bigint.hpp"
#include "flatspec/counting.hpp"
#include "flatspec/flat.hpp"
#include "flatspec/point_set.hpp"
#include "flatspec/quotient.hpp"

namespace flatspec {

// Set of achievable |H ∩ S| over all k-flats H.
struct Profile {
    int k = 0;
    std::vector<std::uint64_t> sizes; // ascending, each realized by some k-flat
};

inline Profile profile(const PointSet& s, int k) {
    std::vector<bool> seen(static_cast<std::size_t>((std::uint64_t{1} << k) + 1), false);
    for_each_k_flat(s.dim(), k, [&](const Flat& f) { seen[intersection_size(s, f)] = true; });
    Profile p{k, {}};
    for (std::size_t t = 0; t < seen.size(); ++t)
        if (seen[t]) p.sizes.push_back(t);
    return p;
}

// ---------------------------------------------------------------------------
// Forcing relation and spectra
// ---------------------------------------------------------------------------

struct ForcesOptions {
    bool allow_n5 = false;  // full exhaustion stops at n=4; n=5 is opt-in
    bool orbit_prune = false; // restrict to linearly normalized representatives
    int jobs = 1;
};

struct ForcesResult {
    bool forced;
    std::optional<PointSet> witness; // an m-set avoiding t when not forced
};

namespace detail {

// Linear normalization predicate: scanning the nonzero points in increasing
// order, every point outside the span of the previous ones must be the next
// standard basis vector. Each GL(n,2)-orbit of sets containing zero has at
// least one such representative, so restricting the search to them preserves
// the forcing answer.
inline bool is_span_normalized(std::uint32_t subset_word) {
    int rank = 0;
    std::uint32_t w = subset_word >> 1;
    int p = 1;
    while (w) {
        const int step = std::countr_zero(w);
        p += step;
        w >>= step;
        if (p >= (1 << rank)) {
            if (p != (1 << rank)) return false;
            ++rank;
        }
        w >>= 1;
        ++p;
    }
    return true;
}

// Occupancy masks of all k-flats of F_2^n, in enumeration order; usable for
// n <= 5 where the universe fits one word.
inline std::vector<std::uint32_t> flat_point_masks(int n, int k) {
    std::vector<std::uint32_t> masks;
    for_each_k_flat(n, k, [&](const Flat& f) {
        std::uint32_t m = 0;
        f.for_each_point([&](Point p) { m |= std::uint32_t{1} << p; });
        masks.push_back(m);
    });
    return masks;
}

// Visits every m-subset of [0, 2^n) containing 0, as a bitmask, in increasing
// word order (= colexicographic on the point sets). fn returns false to stop.
template <typename Fn>
inline void for_each_zero_subset(int n, std::uint64_t m, Fn&& fn) {
    const int universe = 1 << n;
    if (m == 0 || m > static_cast<std::uint64_t>(universe)) return;
    const int extra = static_cast<int>(m) - 1;
    std::vector<int> c(static_cast<std::size_t>(extra));
    for (int i = 0; i < extra; ++i) c[i] = i + 1;
    while (true) {
        std::uint32_t word = 1;
        for (int i = 0; i < extra; ++i) word |= std::uint32_t{1} << c[i];
        if (!fn(word)) return;
        int i = 0;
        while (i < extra && (i + 1 < extra ? c[i] + 1 == c[i + 1] : c[i] + 1 == universe)) ++i;
        if (i == extra) return;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j + 1;
    }
}

inline void validate_forces_args(int n, std::uint64_t m, int k, int t, const ForcesOptions& opts) {
    if (n < 1 || n > 5 || (n == 5 && !opts.allow_n5))
        throw std::invalid_argument("forces: exhaustive search accepts n <= 4 (n = 5 with allow_n5)");
    if (k < 0 || k > n) throw std::invalid_argument("forces: need 0 <= k <= n");
    if (t < 0 || static_cast<std::uint64_t>(t) > (std::uint64_t{1} << k))
        throw std::invalid_argument("forces: need 0 <= t <= 2^k");
    if (m > (std::uint64_t{1} << n)) throw std::invalid_argument("forces: m exceeds 2^n");
    if (opts.jobs < 1) throw std::invalid_argument("forces: jobs must be positive");
}

} // namespace detail

// Does every m-subset of F_2^n induce a k-flat with exactly t points?
// Translation invariance restricts the search to sets containing zero; the
// witness, when present, is the first counterexample in word order.
inline ForcesResult forces(int n, std::uint64_t m, int k, int t, const ForcesOptions& opts = {}) {
    detail::validate_forces_args(n, m, k, t, opts);
    const bool prune = opts.orbit_prune || n == 5;

    if (m == 0) {
        if (t == 0) return {true, std::nullopt};
        return {false, PointSet(n)};
    }

    const auto masks = detail::flat_point_masks(n, k);
    const std::uint64_t tt = static_cast<std::uint64_t>(t);

    auto scan_shard = [&](int jobs, int shard) -> std::optional<std::pair<std::uint64_t, std::uint32_t>> {
        std::optional<std::pair<std::uint64_t, std::uint32_t>> hit;
        std::uint64_t index = 0;
        detail::for_each_zero_subset(n, m, [&](std::uint32_t word) {
            const std::uint64_t my_index = index++;
            if (static_cast<int>(my_index % jobs) != shard) return true;
            if (prune && !detail::is_span_normalized(word)) return true;
            for (std::uint32_t mask : masks)
                if (static_cast<std::uint64_t>(std::popcount(word & mask)) == tt) return true;
            hit = {my_index, word};
            return false; // this shard's first witness; keep others running
        });
        return hit;
    };

    std::optional<std::uint32_t> witness_word;
    if (opts.jobs == 1) {
        if (auto hit = scan_shard(1, 0)) witness_word = hit->second;
    } else {
        std::vector<std::optional<std::pair<std::uint64_t, std::uint32_t>>> hits(opts.jobs);
        std::vector<std::thread> workers;
        workers.reserve(opts.jobs);
        for (int w = 0; w < opts.jobs; ++w)
            workers.emplace_back([&, w] { hits[w] = scan_shard(opts.jobs, w); });
        for (auto& th : workers) th.join();
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& h : hits)
            if (h && h->first < best) {
                best = h->first;
                witness_word = h->second;
            }
    }

    if (!witness_word) return {true, std::nullopt};
    PointSet witness(n);
    for (int p = 0; p < (1 << n); ++p)
        if ((*witness_word >> p) & 1) witness.insert(static_cast<Point>(p));
    return {false, std::move(witness)};
}

struct Spectrum {
    int n = 0, k = 0, t = 0;
    std::vector<std::uint64_t> members; // ascending m-values
    double density = 0.0;               // |members| / 2^n
    std::string method;                 // "exhaustive" or "closed-form"
};

inline Spectrum spectrum(int n, int k, int t, const ForcesOptions& opts = {}) {
    Spectrum sp{n, k, t, {}, 0.0, "exhaustive"};
    for (std::uint64_t m = 0; m <= (std::uint64_t{1} << n); ++m)
        if (forces(n, m, k, t, opts).forced) sp.members.push_back(m);
    sp.density = static_cast<double>(sp.members.size()) / std::ldexp(1.0, n);
    return sp;
}

// forcing_table(n,k)[m] has bit t set iff [n,m] -> [k,t]; one sweep over the
// zero-containing subsets answers every (m,t) pair at once. n <= 4.
inline std::vector<std::uint64_t> forcing_table(int n, int k, bool orbit_prune = false) {
    if (n < 1 || n > 4) throw std::invalid_argument("forcing_table: n must be in [1, 4]");
    if (k < 0 || k > n) throw std::invalid_argument("forcing_table: need 0 <= k <= n");
    const auto masks = detail::flat_point_masks(n, k);
    const std::uint64_t universe = std::uint64_t{1} << n;
    const int tmax = 1 << k;
    const std::uint64_t all = (tmax + 1 >= 64) ? ~std::uint64_t{0}
                                               : ((std::uint64_t{1} << (tmax + 1)) - 1);
    std::vector<std::uint64_t> acc(universe + 1, all);
    // empty set: every flat holds 0 points
    acc[0] = 1;
    for (std::uint64_t m = 1; m <= universe; ++m) {
        detail::for_each_zero_subset(n, m, [&](std::uint32_t word) {
            if (orbit_prune && !detail::is_span_normalized(word)) return true;
            std::uint64_t present = 0;
            for (std::uint32_t mask : masks) present |= std::uint64_t{1} << std::popcount(word & mask);
            acc[m] &= present;
            return acc[m] != 0;
        });
    }
    return acc;
}

// The closed forms known for small (k,t); nullopt where the spectrum is an
// open problem (notably (2,0) and (2,4), the Sidon cases).
inline std::optional<Spectrum> closed_form_spectrum(int n, int k, int t) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("closed_form_spectrum: need 0 <= k <= n");
    if (t < 0 || static_cast<std::uint64_t>(t) > (std::uint64_t{1} << k))
        throw std::invalid_argument("closed_form_spectrum: need 0 <= t <= 2^k");
    const std::uint64_t u = std::uint64_t{1} << n;
    std::vector<bool> member(u + 1, false);
    auto range = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t m = lo; m <= hi; ++m) member[m] = true;
    };
    if (k == 1 && t == 0) {
        range(0, u - 2);
    } else if (k == 1 && t == 1) {
        range(1, u - 1);
    } else if (k == 1 && t == 2) {
        range(2, u);
    } else if (k == 2 && t == 1) {
        range(0, u);
        member[u] = false;
        for (int d = 0; d <= n; ++d) member[u - (std::uint64_t{1} << d)] = false;
    } else if (k == 2 && t == 2) {
        range(2, u - 2);
    } else if (k == 2 && t == 3) {
        range(0, u);
        member[0] = false;
        for (int d = 0; d <= n; ++d) member[std::uint64_t{1} << d] = false;
    } else if (k == 3 && t == 4) {
        range(4, u - 4);
    } else {
        return std::nullopt;
    }
    Spectrum sp{n, k, t, {}, 0.0, "closed-form"};
    for (std::uint64_t m = 0; m <= u; ++m)
        if (member[m]) sp.members.push_back(m);
    sp.density = static_cast<double>(sp.members.size()) / std::ldexp(1.0, n);
    return sp;
}

// ---------------------------------------------------------------------------
// Sidon property, difference statistics, additive energy
// ---------------------------------------------------------------------------

struct SidonCheck {
    bool sidon;
    std::optional<Flat> witness; // a 2-flat fully inside S when not Sidon
};

// S is Sidon iff all pairwise sums are distinct; a repeated sum yields four
// distinct points forming a 2-flat with all four points in S.
inline SidonCheck is_sidon(const PointSet& s) {
    const int n = s.dim();
    const auto pts = s.points();
    std::vector<std::int64_t> first_pair(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Point v = pts[i] ^ pts[j];
            if (first_pair[v] >= 0) {
                const Point a = static_cast<Point>(first_pair[v] >> 32);
                const Point b = static_cast<Point>(first_pair[v] & 0xffffffff);
                const Point quad[4] = {a, b, pts[i], pts[j]};
                return {false, Flat::affine_span(n, quad)};
            }
            first_pair[v] = (static_cast<std::int64_t>(pts[i]) << 32) | pts[j];
        }
    return {true, std::nullopt};
}

// p_v = number of unordered pairs in S with difference v, for each v != 0.
struct DiffCounts {
    int n = 0;
    std::uint64_t m = 0;
    std::vector<std::uint32_t> counts; // indexed by v; counts[0] stays 0

    BigInt sum_of_squares() const {
        unsigned __int128 acc = 0;
        for (std::uint32_t c : counts) acc += static_cast<unsigned __int128>(c) * c;
        BigInt r = static_cast<std::uint64_t>(acc >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(acc);
        return r;
    }
};

inline DiffCounts diff_counts(const PointSet& s) {
    const int n = s.dim();
    if (n > kMaxDiffDim) throw std::invalid_argument("diff_counts: dimension exceeds the difference-table cap");
    DiffCounts dc{n, s.size(), std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
    const auto pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) ++dc.counts[pts[i] ^ pts[j]];
    return dc;
}

// E(S) = |{(u1,u2,u3,u4) in S^4 : u1+u2 = u3+u4}| = m^2 + 4 sum_v p_v^2.
inline BigInt additive_energy(const PointSet& s) {
    const DiffCounts dc = diff_counts(s);
    return BigInt(dc.m) * dc.m + 4 * dc.sum_of_squares();
}

// Histogram t -> F_{d,t}(S) over all d-flats of the ambient space.
inline std::vector<std::uint64_t> flat_statistics(const PointSet& s, int d) {
    std::vector<std::uint64_t> hist(std::size_t(std::uint64_t{1} << d) + 1, 0);
    for_each_k_flat(s.dim(), d, [&](const Flat& f) { ++hist[intersection_size(s, f)]; });
    return hist;
}

// Histogram over the cosets of span(dirs) only; rejects dependent directions.
inline std::vector<std::uint64_t> flat_statistics_directed(const PointSet& s,
                                                           std::span<const Point> dirs) {
    const int n = s.dim();
    Flat span(n, dirs, 0); // throws if the directions are dependent
    std::vector<std::uint64_t> hist(std::size_t(span.point_count()) + 1, 0);
    std::vector<bool> visited(std::size_t{1} << n, false);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        if (visited[x]) continue;
        std::uint64_t cnt = 0;
        span.for_each_point([&](Point p) {
            const Point y = static_cast<Point>(x) ^ p;
            visited[y] = true;
            cnt += s.contains(y) ? 1 : 0;
        });
        ++hist[cnt];
    }
    return hist;
}

// F_{2,3} via the energy identity (m^3 - E(S)) / 6.
inline BigInt f23_from_energy(const PointSet& s) {
    const BigInt m = s.size();
    const BigInt diff = m * m * m - additive_energy(s);
    if (diff % 6 != 0) throw std::logic_error("f23_from_energy: identity violated");
    return diff / 6;
}

// Distance from a to the nearest multiple of d.
inline std::uint64_t least_absolute_residue(std::int64_t a, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("least_absolute_residue: modulus must be positive");
    const std::int64_t r = ((a % d) + d) % d;
    return static_cast<std::uint64_t>(std::min(r, d - r));
}

// Argmax of p_v, ties to the smallest v; the maximum is at least
// binom(m,2)/(2^n - 1) by pigeonhole.
inline std::pair<Point, std::uint32_t> most_frequent_difference(const PointSet& s) {
    if (s.size() < 2) throw std::invalid_argument("most_frequent_difference: need at least two points");
    const DiffCounts dc = diff_counts(s);
    Point best_v = 1;
    std::uint32_t best = dc.counts[1];
    for (std::uint64_t v = 2; v < dc.counts.size(); ++v)
        if (dc.counts[v] > best) {
            best = dc.counts[v];
            best_v = static_cast<Point>(v);
        }
    return {best_v, best};
}

// Recursive full-flat search: quotient along the most frequent difference,
// find a (k-1)-flat among the doubled cosets, lift. Succeeds whenever
// |S| >= (5/2) 2^{n(1 - 1/2^{k-1})}; below that failure is a value.
inline std::optional<Flat> find_full_flat(const PointSet& s, int k) {
    if (k < 1) throw std::invalid_argument("find_full_flat: k must be positive");
    if (k > s.dim()) return std::nullopt;
    if (s.size() < 2) return std::nullopt;
    if (k == 1) {
        const auto pts = s.points();
        const Point two[2] = {pts[0], pts[1]};
        return Flat::affine_span(s.dim(), two);
    }
    const Point v = most_frequent_difference(s).first;
    const QuotientMap q = quotient_by(s.dim(), v);
    const PointSet doubled = push_coset_counts(s, q, 2);
    const auto sub = find_full_flat(doubled, k - 1);
    if (!sub) return std::nullopt;
    std::vector<Point> lifted;
    lifted.reserve(sub->point_count() * 2);
    sub->for_each_point([&](Point y) {
        const Point rep = q.section(y);
        lifted.push_back(rep);
        lifted.push_back(rep ^ v);
    });
    Flat f = Flat::affine_span(s.dim(), lifted);
    if (f.dim() != k) throw std::logic_error("find_full_flat: lifted flat has wrong dimension");
    return f;
}

// Guarantee threshold of the full-flat search, (5/2) 2^{n(1 - 1/2^{k-1})}.
inline double full_flat_threshold(int n, int k) {
    return 2.5 * std::pow(2.0, n * (1.0 - std::ldexp(1.0, -(k - 1))));
}

// The concrete constant recursion behind the threshold:
// C_1 = 2, C_k = sqrt(C_{k-1}) 2^{1/2^{k-1}} + 2^{-k(1 - 1/2^{k-1})}.
inline double order2_constant(int k) {
    if (k < 1) throw std::invalid_argument("order2_constant: k must be positive");
    double c = 2.0;
    for (int i = 2; i <= k; ++i)
        c = std::sqrt(c) * std::pow(2.0, std::ldexp(1.0, -(i - 1))) +
            std::pow(2.0, -i * (1.0 - std::ldexp(1.0, -(i - 1))));
    return c;
}

// Monitoring report for the energy upper bound E <= m^3 - m^{2+alpha-eps}
// under the residue premise; the conclusion is reported, not asserted,
// because the premise only bites for sufficiently large m.
struct EnergyBoundReport {
    std::uint64_t m = 0;
    int k = 0; // m in [2^k, 2^{k+1})
    double alpha = 0, eps = 0;
    std::uint64_t residue_modulus = 0; // 2^ceil((alpha+eps) k)
    std::uint64_t residue = 0;         // distance of m to the nearest multiple
    double residue_threshold = 0;      // 2^{alpha k}
    bool premise_holds = false;
    BigInt energy;
    BigInt weak_bound; // m^3
    bool weak_bound_holds = false;
    double strong_bound = 0; // m^3 - m^{2+alpha-eps}
    bool conclusion_holds = false;
};

inline EnergyBoundReport energy_bound_check(const PointSet& s, double alpha, double eps) {
    if (!(alpha >= 0.5 && alpha < 1.0)) throw std::invalid_argument("energy_bound_check: need 1/2 <= alpha < 1");
    if (!(eps > 0.0) || !(alpha + eps < 1.0))
        throw std::invalid_argument("energy_bound_check: need eps > 0 and alpha + eps < 1");
    if (s.empty()) throw std::invalid_argument("energy_bound_check: empty set");
    EnergyBoundReport r;
    r.m = s.size();
    r.k = 63 - std::countl_zero(r.m);
    r.alpha = alpha;
    r.eps = eps;
    const int b = static_cast<int>(std::ceil((alpha + eps) * r.k));
    r.residue_modulus = std::uint64_t{1} << b;
    r.residue = least_absolute_residue(static_cast<std::int64_t>(r.m),
                                       static_cast<std::int64_t>(r.residue_modulus));
    r.residue_threshold = std::pow(2.0, alpha * r.k);
    r.premise_holds = static_cast<double>(r.residue) >= r.residue_threshold;
    r.energy = additive_energy(s);
    r.weak_bound = BigInt(r.m) * r.m * r.m;
    r.weak_bound_holds = r.energy <= r.weak_bound;
    const double md = static_cast<double>(r.m);
    r.strong_bound = md * md * md - std::pow(md, 2.0 + alpha - eps);
    r.conclusion_holds = r.energy.convert_to<double>() <= r.strong_bound;
    return r;
}

// S is a flat iff it equals its own affine span.
inline bool is_flat_set(const PointSet& s) {
    if (s.empty()) return false;
    const auto pts = s.points();
    const Flat span = Flat::affine_span(s.dim(), pts);
    return span.point_count() == s.size();
}

} // namespace flatspec
