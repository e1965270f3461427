#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flatspec/analysis.hpp"
#include "flatspec/constructions.hpp"
#include "flatspec/counting.hpp"
#include "flatspec/field.hpp"
#include "flatspec/flat.hpp"
#include "flatspec/hypercube.hpp"
#include "flatspec/numerals.hpp"
#include "flatspec/point_set.hpp"
#include "flatspec/quotient.hpp"
#include "flatspec/rng.hpp"
#include "flatspec/version.hpp"

namespace flatspec {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

using CheckList = std::vector<Check>;

namespace verify_detail {

inline void add(CheckList& list, const std::string& name, bool pass, const std::string& detail = "") {
    list.push_back({name, pass, detail});
}

// ---------------------------------------------------------------------------
// Independent oracles. These deliberately avoid the library's fast paths.
// ---------------------------------------------------------------------------

inline BigInt naive_psi(std::uint64_t t) {
    BigInt total = 0;
    for (std::uint64_t i = 0; i < t; ++i) total += std::popcount(i);
    return total;
}

// Right-to-left string rewrite: the lowest run of at least two adjacent 1s,
// together with the 0 above it, becomes -1, zeros, carry 1.
inline std::vector<int> csd_by_rewrite(std::uint64_t m) {
    std::vector<int> d;
    for (std::uint64_t v = m; v; v >>= 1) d.push_back(static_cast<int>(v & 1));
    d.push_back(0);
    while (true) {
        std::size_t i = 0;
        while (i + 1 < d.size() && !(d[i] == 1 && d[i + 1] == 1)) ++i;
        if (i + 1 >= d.size()) break;
        std::size_t j = i;
        while (j + 1 < d.size() && d[j + 1] == 1) ++j;
        if (j + 1 >= d.size()) d.push_back(0);
        d[i] = -1;
        for (std::size_t p = i + 1; p <= j; ++p) d[p] = 0;
        d[j + 1] = 1;
    }
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

// Quadruple count by the defining triple loop.
inline BigInt brute_energy(const PointSet& s) {
    const auto pts = s.points();
    std::uint64_t count = 0;
    for (Point a : pts)
        for (Point b : pts)
            for (Point c : pts) count += s.contains(a ^ b ^ c) ? 1 : 0;
    return count;
}

inline PointSet subset_from_mask(int n, std::uint32_t mask) {
    PointSet s(n);
    for (int p = 0; p < (1 << n); ++p)
        if ((mask >> p) & 1) s.insert(static_cast<Point>(p));
    return s;
}

inline PointSet random_point_set(int n, std::uint64_t m, SplitMix64& rng) {
    return PointSet::from_points(n, random_subset(std::uint64_t{1} << n, m, rng));
}

// Shared by the lexicographic avoidance checks and the acceptance gate:
// collects pf(L_m, k) for every m and k at ambient dimension n, and counts
// violations of the digit-sum / signed-digit / profile-size bounds.
struct LexScanResult {
    std::uint64_t violations_s2 = 0;
    std::uint64_t violations_s2_star = 0;
    std::uint64_t profile_size_violations = 0;
    std::uint64_t flats_scanned = 0;
};

inline LexScanResult lex_avoidance_scan(int n) {
    LexScanResult res;
    const int universe = 1 << n;
    std::vector<int> s2_tab(universe + 1), s2s_tab(universe + 1);
    for (int v = 0; v <= universe; ++v) {
        s2_tab[v] = s2(static_cast<std::uint64_t>(v));
        s2s_tab[v] = s2_star(v);
    }
    std::vector<char> mark(universe, 0);
    for (int k = 0; k <= n; ++k) {
        const int tmax = 1 << k;
        // profile bitsets, one per m
        std::vector<std::vector<std::uint64_t>> prof(
            universe + 1, std::vector<std::uint64_t>((tmax + 64) / 64 + 1, 0));
        for_each_k_flat(n, k, [&](const Flat& f) {
            ++res.flats_scanned;
            f.for_each_point([&](Point p) { mark[p] = 1; });
            int cnt = 0;
            prof[0][0] |= 1; // L_0 meets everything in 0 points
            for (int m = 1; m <= universe; ++m) {
                cnt += mark[m - 1];
                prof[m][cnt >> 6] |= std::uint64_t{1} << (cnt & 63);
            }
            f.for_each_point([&](Point p) { mark[p] = 0; });
        });
        for (int m = 0; m <= universe; ++m) {
            std::uint64_t profile_size = 0;
            for (int t = 0; t <= tmax; ++t) {
                if (!((prof[m][t >> 6] >> (t & 63)) & 1)) continue;
                ++profile_size;
                if (s2_tab[t] > s2_tab[m]) ++res.violations_s2;
                if (s2s_tab[t] > s2s_tab[m]) ++res.violations_s2_star;
            }
            // |pf(L_m, k)| <= 1 + sum_{j <= s2(m)} C(k, j)
            std::uint64_t bound = 1;
            std::uint64_t c = 1;
            for (int j = 0; j <= s2_tab[m] && j <= k; ++j) {
                bound += c;
                c = c * (k - j) / (j + 1);
            }
            if (profile_size > bound) ++res.profile_size_violations;
        }
    }
    return res;
}

// Preimage of a flat of the quotient space: a (dim+1)-flat upstairs.
inline Flat lift_flat(const QuotientMap& q, const Flat& downstairs) {
    std::vector<Point> pts;
    downstairs.for_each_point([&](Point y) {
        const Point rep = q.section(y);
        pts.push_back(rep);
        pts.push_back(rep ^ q.kernel());
    });
    return Flat::affine_span(q.source_dim(), pts);
}

// Kernel direction maximizing the number of fibers meeting S exactly once.
inline Point best_single_direction(const PointSet& s) {
    const int n = s.dim();
    Point best_d = 1;
    std::uint64_t best = 0;
    for (std::uint32_t d = 1; d < (1u << n); ++d) {
        const QuotientMap q = quotient_by(n, d);
        const std::uint64_t cnt = push_coset_counts(s, q, 1).size();
        if (cnt > best) {
            best = cnt;
            best_d = d;
        }
    }
    return best_d;
}

} // namespace verify_detail

// ---------------------------------------------------------------------------
// small-spectra: exhaustive spectra vs closed forms, duality, orbit pruning
// ---------------------------------------------------------------------------

inline CheckList verify_small_spectra() {
    using namespace verify_detail;
    CheckList out;
    const std::vector<std::pair<int, int>> pairs = {{1, 0}, {1, 1}, {1, 2}, {2, 1},
                                                    {2, 2}, {2, 3}, {3, 4}};
    for (int n : {3, 4}) {
        std::map<int, std::vector<std::uint64_t>> tables;
        for (auto [k, t] : pairs) {
            if (!tables.count(k)) tables[k] = forcing_table(n, k);
            const auto& acc = tables[k];
            std::vector<std::uint64_t> members;
            for (std::uint64_t m = 0; m < acc.size(); ++m)
                if ((acc[m] >> t) & 1) members.push_back(m);
            const auto cf = closed_form_spectrum(n, k, t);
            const bool ok = cf && cf->members == members;
            std::ostringstream os;
            os << "n=" << n << " k=" << k << " t=" << t << " |Sp|=" << members.size();
            add(out, "small_spectra.closed_form", ok, os.str());
        }
        // duality Sp(n;k,t) = 2^n - Sp(n;k,2^k-t), every k and t
        bool dual_ok = true;
        const std::uint64_t u = std::uint64_t{1} << n;
        for (int k = 0; k <= n; ++k) {
            const auto acc = forcing_table(n, k);
            for (int t = 0; t <= (1 << k); ++t)
                for (std::uint64_t m = 0; m <= u; ++m) {
                    const bool a = (acc[m] >> t) & 1;
                    const bool b = (acc[u - m] >> ((1 << k) - t)) & 1;
                    if (a != b) dual_ok = false;
                }
        }
        add(out, "small_spectra.duality", dual_ok, "n=" + std::to_string(n) + ", all (k,t)");
        // orbit pruning must not change any answer
        bool prune_ok = true;
        for (int k = 0; k <= n; ++k)
            if (forcing_table(n, k, true) != forcing_table(n, k, false)) prune_ok = false;
        add(out, "small_spectra.orbit_prune_agrees", prune_ok, "n=" + std::to_string(n));
    }
    // per-m forces agrees with the sweep table, including witnesses avoiding t
    {
        bool ok = true;
        const auto acc = forcing_table(3, 2);
        for (int t = 0; t <= 4 && ok; ++t)
            for (std::uint64_t m = 0; m <= 8 && ok; ++m) {
                const auto r = forces(3, m, 2, t);
                if (r.forced != ((acc[m] >> t) & 1)) ok = false;
                if (!r.forced) {
                    if (!r.witness || r.witness->size() != m) ok = false;
                    else {
                        const Profile p = profile(*r.witness, 2);
                        if (std::count(p.sizes.begin(), p.sizes.end(),
                                       static_cast<std::uint64_t>(t)) != 0)
                            ok = false;
                    }
                }
            }
        add(out, "small_spectra.forces_matches_table", ok, "n=3 k=2, witnesses verified");
    }
    return out;
}

// ---------------------------------------------------------------------------
// profiles: core geometry, quotients, lexicographic avoidance, constructions
// ---------------------------------------------------------------------------

inline CheckList verify_profiles(std::uint64_t seed = kDefaultSeed) {
    using namespace verify_detail;
    CheckList out;
    SplitMix64 rng(seed);

    // flat enumeration: exact counts, no duplicates, every n <= 4
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                std::set<Flat> seen;
                std::uint64_t cnt = 0;
                for_each_k_flat(n, k, [&](const Flat& f) {
                    ++cnt;
                    seen.insert(f);
                });
                if (BigInt(cnt) != count_k_flats(n, k, 2) || seen.size() != cnt) ok = false;
            }
        add(out, "core.flat_enumeration_counts", ok, "n <= 4, all k");
    }
    // membership size and affine closure under p+q+r
    {
        bool ok = true;
        for_each_k_flat(4, 2, [&](const Flat& f) {
            const auto pts = f.points();
            if (pts.size() != 4) ok = false;
            for (Point p : pts)
                for (Point q : pts)
                    for (Point r : pts)
                        if (!f.contains(p ^ q ^ r)) ok = false;
        });
        add(out, "core.flat_affine_closure", ok, "all 2-flats of F_2^4");
    }
    // |S ∩ H| + |complement ∩ H| = 2^k for every flat
    {
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            const PointSet s = random_point_set(4, rng.below(17), rng);
            const PointSet sc = s.complement();
            for (int k = 0; k <= 4; ++k)
                for_each_k_flat(4, k, [&](const Flat& f) {
                    if (intersection_size(s, f) + intersection_size(sc, f) != f.point_count())
                        ok = false;
                });
        }
        add(out, "core.intersection_complement", ok, "n=4 exhaustive flats, 20 random sets");
    }
    // balanced hyperplane window over 1000 random sets, n <= 12
    {
        bool ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(12));
            const std::uint64_t m = rng.below((std::uint64_t{1} << n) + 1);
            const PointSet s = random_point_set(n, m, rng);
            const Flat h = balanced_hyperplane(s);
            if (h.dim() != n - 1 || h.offset() != 0 || !h.contains(0)) ok = false;
            const double cnt = static_cast<double>(intersection_size(s, h));
            const double md = static_cast<double>(m);
            if (std::abs(cnt - md / 2) > std::sqrt(md) / 2 + 1e-9) ok = false;
        }
        add(out, "core.balanced_hyperplane_window", ok, "1000 random sets, n <= 12");
    }
    // quotient: kernel annihilated, section identity, fibers partition
    {
        bool ok = true;
        for (int n = 2; n <= 6; ++n)
            for (std::uint32_t d = 1; d < (1u << n); ++d) {
                const QuotientMap q = quotient_by(n, d);
                if (q.apply(d) != 0) ok = false;
                std::vector<int> fiber_hits(std::size_t{1} << (n - 1), 0);
                for (std::uint32_t y = 0; y < (1u << (n - 1)); ++y)
                    if (q.apply(q.section(y)) != y) ok = false;
                for (std::uint32_t x = 0; x < (1u << n); ++x) ++fiber_hits[q.apply(x)];
                for (int h : fiber_hits)
                    if (h != 2) ok = false;
            }
        add(out, "core.quotient_section_fibers", ok, "n <= 6, all kernels");
    }
    // push_coset_counts edges
    {
        const QuotientMap q = quotient_by(3, 1);
        const PointSet full = PointSet::full(3);
        const PointSet empty(3);
        bool ok = push_coset_counts(full, q, 2).size() == 4 &&
                  push_coset_counts(empty, q, 0).size() == 4 &&
                  push_coset_counts(full, q, 1).empty();
        PointSet s(3);
        s.insert(0);
        s.insert(1);
        s.insert(6);
        ok = ok && push_coset_counts(s, q, 2).size() == 1;
        add(out, "core.push_coset_counts", ok);
    }
    // lexicographic avoidance: s2, s2*, and the profile size bound, n <= 8
    {
        LexScanResult total;
        for (int n = 1; n <= 8; ++n) {
            const LexScanResult r = lex_avoidance_scan(n);
            total.violations_s2 += r.violations_s2;
            total.violations_s2_star += r.violations_s2_star;
            total.profile_size_violations += r.profile_size_violations;
            total.flats_scanned += r.flats_scanned;
        }
        std::ostringstream os;
        os << total.flats_scanned << " flats scanned";
        add(out, "lex.digit_sum_avoidance", total.violations_s2 == 0, os.str());
        add(out, "lex.signed_digit_avoidance", total.violations_s2_star == 0, os.str());
        add(out, "lex.profile_size_bound", total.profile_size_violations == 0, os.str());
    }
    // lexicographic flat decomposition: s2(m) disjoint flats with dims supp(m)
    {
        bool ok = true;
        for (std::uint64_t m = 0; m <= 32; ++m) {
            const PointSet lex = lexicographic(5, m);
            std::uint64_t covered = 0;
            std::uint64_t base = 0;
            const auto dims = supp(m);
            for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
                // block [base, base + 2^d) is a d-flat inside L_m
                std::vector<Point> pts;
                for (std::uint64_t p = base; p < base + (std::uint64_t{1} << *it); ++p)
                    pts.push_back(static_cast<Point>(p));
                const Flat f = Flat::affine_span(5, pts);
                if (f.dim() != *it) ok = false;
                for (Point p : pts)
                    if (!lex.contains(p)) ok = false;
                covered += pts.size();
                base += std::uint64_t{1} << *it;
            }
            if (covered != lex.size()) ok = false;
        }
        add(out, "lex.flat_decomposition", ok, "n=5, every m");
    }
    // profile complement duality: exhaustive n=3, random larger n
    {
        bool ok = true;
        for (std::uint32_t mask = 0; mask < 256; ++mask) {
            const PointSet s = subset_from_mask(3, mask);
            for (int k = 1; k <= 3; ++k) {
                const Profile a = profile(s, k);
                const Profile b = profile(s.complement(), k);
                std::vector<std::uint64_t> reflected;
                for (auto it = b.sizes.rbegin(); it != b.sizes.rend(); ++it)
                    reflected.push_back((std::uint64_t{1} << k) - *it);
                if (a.sizes != reflected) ok = false;
            }
        }
        for (int trial = 0; trial < 40 && ok; ++trial) {
            const int n = 5 + static_cast<int>(rng.below(4));
            const PointSet s = random_point_set(n, rng.below((std::uint64_t{1} << n) + 1), rng);
            const Profile a = profile(s, 2);
            const Profile b = profile(s.complement(), 2);
            std::vector<std::uint64_t> reflected;
            for (auto it = b.sizes.rbegin(); it != b.sizes.rend(); ++it)
                reflected.push_back(4 - *it);
            if (a.sizes != reflected) ok = false;
        }
        add(out, "profiles.complement_duality", ok, "exhaustive n=3, random n in [5,8]");
    }
    // profile containment under disjoint union and nested difference
    {
        bool ok = true;
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 4 + static_cast<int>(rng.below(4)); // 4..7
            const PointSet a = random_point_set(n, rng.below(std::uint64_t{1} << (n - 1)), rng);
            PointSet b(n);
            for (std::uint32_t p = 0; p < (1u << n); ++p)
                if (!a.contains(p) && rng.below(3) == 0) b.insert(p);
            for (int k = 1; k <= 2; ++k) {
                const Profile pa = profile(a, k);
                const Profile pb = profile(b, k);
                const Profile pu = profile(a.unite(b), k);
                for (std::uint64_t t : pu.sizes) {
                    bool expressible = false;
                    for (std::uint64_t x : pa.sizes)
                        for (std::uint64_t y : pb.sizes)
                            if (x + y == t) expressible = true;
                    if (!expressible) ok = false;
                }
                // nested difference: a ⊆ a ∪ b
                const PointSet whole = a.unite(b);
                const Profile pd = profile(whole.subtract(a), k);
                for (std::uint64_t t : pd.sizes) {
                    bool expressible = false;
                    for (std::uint64_t x : pu.sizes)
                        for (std::uint64_t y : pa.sizes)
                            if (x >= y && x - y == t) expressible = true;
                    if (!expressible) ok = false;
                }
            }
        }
        add(out, "profiles.union_difference_containment", ok, "25 random pairs, n in [4,7]");
    }
    // field axioms on random triples, e <= 8 (inverse via a^(2^e - 2))
    {
        bool ok = true;
        for (int e = 1; e <= 8; ++e) {
            const std::uint32_t mod = smallest_irreducible(e);
            auto elem = [&](std::uint32_t w) { return FieldElement(e, w & ((1u << e) - 1), mod); };
            for (int trial = 0; trial < 50; ++trial) {
                const FieldElement a = elem(static_cast<std::uint32_t>(rng.next()));
                const FieldElement b = elem(static_cast<std::uint32_t>(rng.next()));
                const FieldElement c = elem(static_cast<std::uint32_t>(rng.next()));
                if (!((a * b) * c == a * (b * c))) ok = false;
                if (!(a * (b + c) == a * b + a * c)) ok = false;
                if (!(a * b == b * a)) ok = false;
                if (a.poly() != 0) {
                    FieldElement inv = elem(1);
                    FieldElement base = a;
                    std::uint64_t exp = (std::uint64_t{1} << e) - 2;
                    while (exp) {
                        if (exp & 1) inv = inv * base;
                        base = base * base;
                        exp >>= 1;
                    }
                    if (!(inv * a == elem(1))) ok = false;
                }
            }
        }
        add(out, "field.axioms", ok, "e <= 8, 50 random triples each");
    }
    // Sidon property of the cubing construction
    {
        bool ok = true;
        for (int n : {2, 4, 6, 8, 10, 12}) {
            const PointSet s = bose_set(n);
            if (s.size() != (std::uint64_t{1} << (n / 2))) ok = false;
            if (!is_sidon(s).sidon) ok = false;
        }
        add(out, "field.bose_sidon", ok, "n in {2,4,6,8,10,12}");
        const EvasiveCheck ev = is_evasive(bose_set(8), 2, 3);
        add(out, "field.bose_evasive_2_3", ev.evasive, "n=8: every 2-flat holds at most 3 points");
    }
    // evasive generator: certified output for several seeds
    {
        bool ok = true;
        for (std::uint64_t s = 1; s <= 4; ++s) {
            const EvasiveResult r = evasive_random({8, 2, 3, s});
            if (!is_evasive(r.set, 2, 3).evasive) ok = false;
        }
        add(out, "constructions.evasive_certified", ok, "(n,k,c)=(8,2,3), seeds 1..4");
    }
    // combinations: structural invariants plus profile containment, n=8
    {
        const int n = 8, k = 2, c = 3;
        const std::uint64_t m = 97;
        const CombinedSet u = combine_union(n, m, k, c, seed);
        bool ok = u.result.size() == m + u.evasive_part.size();
        ok = ok && u.evasive_part.intersect(lexicographic(n, m).translated(u.translate)).empty();
        const Profile pt = profile(lexicographic(n, m).translated(u.translate), k);
        const Profile pr = profile(u.result, k);
        for (std::uint64_t t : pr.sizes) {
            bool expressible = false;
            for (std::uint64_t z : pt.sizes)
                for (int e = 0; e <= c; ++e)
                    if (z + e == t) expressible = true;
            if (!expressible) ok = false;
        }
        add(out, "constructions.combine_union", ok, "n=8 m=97 (k,c)=(2,3)");

        const CombinedSet dmb = combine_difference(n, m, k, c, seed);
        bool ok2 = dmb.result.size() == m - dmb.evasive_part.size();
        const PointSet translate = lexicographic(n, m).translated(dmb.translate);
        ok2 = ok2 && dmb.evasive_part.subtract(translate).empty();
        const Profile pt2 = profile(translate, k);
        const Profile pr2 = profile(dmb.result, k);
        for (std::uint64_t t : pr2.sizes) {
            bool expressible = false;
            for (std::uint64_t z : pt2.sizes)
                for (int e = 0; e <= c; ++e)
                    if (z >= static_cast<std::uint64_t>(e) && z - e == t) expressible = true;
            if (!expressible) ok2 = false;
        }
        add(out, "constructions.combine_difference", ok2, "n=8 m=97 (k,c)=(2,3)");
    }
    // half-density flat instance: quotient by the best single-count direction,
    // then a full flat among the survivors lifts to a [3,4]-flat
    {
        const int n = 8, k = 3;
        const PointSet s = random_point_set(n, 100, rng);
        const Point d = best_single_direction(s);
        const QuotientMap q = quotient_by(n, d);
        const PointSet singles = push_coset_counts(s, q, 1);
        const auto sub = find_full_flat(singles, k - 1);
        bool ok = sub.has_value();
        if (ok) {
            const Flat lifted = lift_flat(q, *sub);
            ok = lifted.dim() == k &&
                 intersection_size(s, lifted) == (std::uint64_t{1} << (k - 1));
        }
        add(out, "constructions.half_flat_instance", ok, "n=8 k=3, m=100");
    }
    // quarter-density flat instance: a second direction pairing single-count
    // cosets with empty ones keeps the count at one per 2-dimensional coset
    {
        const int n = 8, k = 3;
        const PointSet s = random_point_set(n, 64, rng);
        const Point d1 = best_single_direction(s);
        const QuotientMap q1 = quotient_by(n, d1);
        const PointSet singles = push_coset_counts(s, q1, 1);
        const PointSet empties = push_coset_counts(s, q1, 0);
        Point best_d2 = 1;
        std::uint64_t best_cnt = 0;
        PointSet best_s2(n - 2);
        for (std::uint32_t d2 = 1; d2 < (1u << (n - 1)); ++d2) {
            const QuotientMap q2 = quotient_by(n - 1, d2);
            PointSet s2(n - 2);
            for (std::uint32_t y = 0; y < (1u << (n - 2)); ++y) {
                const Point rep = q2.section(y);
                const Point other = rep ^ d2;
                const bool fwd = singles.contains(rep) && empties.contains(other);
                const bool bwd = empties.contains(rep) && singles.contains(other);
                if (fwd || bwd) s2.insert(y);
            }
            if (s2.size() > best_cnt) {
                best_cnt = s2.size();
                best_d2 = d2;
                best_s2 = s2;
            }
        }
        const QuotientMap q2 = quotient_by(n - 1, best_d2);
        const auto sub = find_full_flat(best_s2, k - 2);
        bool ok = sub.has_value();
        if (ok) {
            const Flat lifted = lift_flat(q1, lift_flat(q2, *sub));
            ok = lifted.dim() == k &&
                 intersection_size(s, lifted) == (std::uint64_t{1} << (k - 2));
        }
        add(out, "constructions.power2_flat_instance", ok, "n=8 k=3, two stages, m=64");
    }
    return out;
}

// ---------------------------------------------------------------------------
// energy: difference statistics, additive energy, full-flat search
// ---------------------------------------------------------------------------

inline CheckList verify_energy(std::uint64_t seed = kDefaultSeed) {
    using namespace verify_detail;
    CheckList out;
    SplitMix64 rng(seed);

    // energy formula vs quadruple brute force: every subset of F_2^4
    {
        bool ok = true;
        for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
            const PointSet s = subset_from_mask(4, mask);
            if (additive_energy(s) != brute_energy(s)) {
                ok = false;
                break;
            }
        }
        add(out, "energy.formula_exhaustive", ok, "all 65536 subsets of F_2^4");
    }
    // and on seeded random sets at n = 8
    {
        bool ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            const PointSet s = random_point_set(8, rng.below(161), rng);
            if (additive_energy(s) != brute_energy(s)) ok = false;
        }
        add(out, "energy.formula_random", ok, "1000 random sets, n=8");
    }
    // difference table shape: sum p_v = C(m,2), p_v <= m/2
    {
        bool ok = true;
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(9));
            const PointSet s = random_point_set(n, rng.below((std::uint64_t{1} << n) + 1), rng);
            const DiffCounts dc = diff_counts(s);
            std::uint64_t total = 0;
            for (std::uint32_t c : dc.counts) {
                total += c;
                if (2 * static_cast<std::uint64_t>(c) > dc.m) ok = false;
            }
            if (total != dc.m * (dc.m - 1) / 2) ok = false;
        }
        add(out, "energy.diff_counts_shape", ok, "200 random sets, n <= 10");
    }
    // E <= m^3 with equality exactly on flats
    {
        bool ok = true;
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                for_each_k_flat(n, k, [&](const Flat& f) {
                    const PointSet s = PointSet::from_points(n, f.points());
                    const BigInt m = s.size();
                    if (additive_energy(s) != m * m * m) ok = false;
                });
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 3 + static_cast<int>(rng.below(6));
            const PointSet s = random_point_set(n, 3 + rng.below((std::uint64_t{1} << n) - 3), rng);
            const BigInt m = s.size();
            const BigInt e = additive_energy(s);
            if (e > m * m * m) ok = false;
            if (!is_flat_set(s) && e == m * m * m) ok = false;
        }
        add(out, "energy.cube_bound_flat_equality", ok, "all flats n <= 6; 100 random sets");
    }
    // F_{2,3} via energy equals the direct flat count
    {
        bool ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            const PointSet s = random_point_set(6, rng.below(65), rng);
            const BigInt direct = flat_statistics(s, 2)[3];
            if (f23_from_energy(s) != direct) ok = false;
        }
        PointSet tiny(3);
        tiny.insert(0);
        tiny.insert(1);
        tiny.insert(2);
        ok = ok && f23_from_energy(tiny) == 1 && additive_energy(tiny) == 21;
        add(out, "energy.f23_identity", ok, "100 random sets at n=6");
    }
    // 3 F_{2,3} = sum_v F_{1,2}(v) F_{1,1}(v)
    {
        bool ok = true;
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 3 + static_cast<int>(rng.below(4));
            const PointSet s = random_point_set(n, rng.below((std::uint64_t{1} << n) + 1), rng);
            BigInt total = 0;
            for (std::uint32_t v = 1; v < (1u << n); ++v) {
                const Point dir[1] = {v};
                const auto hist = flat_statistics_directed(s, dir);
                total += BigInt(hist[2]) * hist[1];
            }
            if (total != 3 * flat_statistics(s, 2)[3]) ok = false;
        }
        add(out, "energy.f23_directional_identity", ok, "40 random sets, n <= 6");
    }
    // flat statistics totals: sum_t F_{d,t} and sum_t t F_{d,t}
    {
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 3 + static_cast<int>(rng.below(3));
            const int d = 1 + static_cast<int>(rng.below(2));
            const PointSet s = random_point_set(n, rng.below((std::uint64_t{1} << n) + 1), rng);
            const auto hist = flat_statistics(s, d);
            BigInt count = 0, weighted = 0;
            for (std::size_t t = 0; t < hist.size(); ++t) {
                count += hist[t];
                weighted += BigInt(t) * hist[t];
            }
            if (count != count_k_flats(n, d, 2)) ok = false;
            if (weighted != BigInt(s.size()) * gaussian_binomial(n, d, 2)) ok = false;
        }
        add(out, "energy.flat_statistics_totals", ok, "20 random sets");
    }
    // most frequent difference beats the pigeonhole average, n=10
    {
        bool ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::uint64_t m = 2 + rng.below(512);
            const PointSet s = random_point_set(10, m, rng);
            const auto [v, p] = most_frequent_difference(s);
            if (v == 0) ok = false;
            // p * (2^n - 1) >= C(m,2)
            if (static_cast<std::uint64_t>(p) * 1023 < m * (m - 1) / 2) ok = false;
        }
        add(out, "energy.most_frequent_difference_bound", ok, "1000 random sets, n=10");
    }
    // sum-of-squares bound on admissible integer sequences
    {
        bool ok = true;
        for (int trial = 0; trial < 10000; ++trial) {
            const int len = 1 + static_cast<int>(rng.below(30));
            const std::int64_t big = 2 + static_cast<std::int64_t>(rng.below(50));
            const std::int64_t small = 1 + static_cast<std::int64_t>(rng.below(big - 1));
            const int a_prime = static_cast<int>(rng.below(len + 1));
            std::int64_t total = 0, sumsq = 0;
            for (int i = 0; i < len; ++i) {
                const std::int64_t hi = (i < a_prime) ? big : small;
                const std::int64_t h = static_cast<std::int64_t>(rng.below(hi + 1));
                total += h;
                sumsq += h * h;
            }
            // sum h_i^2 <= a' M^2 + (N - a' M) M_1, exact in integers
            if (sumsq > a_prime * big * big + (total - a_prime * big) * small) ok = false;
        }
        add(out, "energy.sum_of_squares_bound", ok, "10^4 random sequences");
    }
    // rich-difference cut consequence on realized instances
    {
        bool ok = true;
        int instances = 0;
        for (int trial = 0; trial < 400; ++trial) {
            const int n = 5 + static_cast<int>(rng.below(4));
            const std::uint64_t m = 8 + rng.below((std::uint64_t{1} << n) - 7);
            const PointSet s = random_point_set(n, m, rng);
            const DiffCounts dc = diff_counts(s);
            for (int b = 1; b < n; ++b) {
                std::int64_t c = -1;
                // largest c with at least 2^b rich differences
                std::vector<std::uint32_t> sorted(dc.counts.begin() + 1, dc.counts.end());
                std::sort(sorted.rbegin(), sorted.rend());
                if (sorted.size() >= (std::size_t{1} << b)) c = sorted[(std::size_t{1} << b) - 1];
                if (c < 1) continue;
                for (int d = 1; d < b; ++d) {
                    if (least_absolute_residue(static_cast<std::int64_t>(m),
                                               std::int64_t{1} << (b + 1)) <
                        (std::uint64_t{1} << d))
                        continue;
                    ++instances;
                    const std::int64_t lhs = (b + 1) * (static_cast<std::int64_t>(m) - 2 * c);
                    const std::int64_t rhs = (std::int64_t{1} << d) * (b + 1 - d);
                    if (lhs < rhs) ok = false;
                }
            }
        }
        add(out, "energy.rich_difference_bound", ok,
            std::to_string(instances) + " realized premise instances");
    }
    // constructive full-flat search: planted flat at n=10, threshold at n=4
    {
        bool ok = true;
        for (int trial = 0; trial < 10; ++trial) {
            PointSet s = random_point_set(10, 40, rng);
            const std::uint32_t base = static_cast<std::uint32_t>(rng.below(1 << 10));
            const std::uint32_t va = 1u << rng.below(10);
            std::uint32_t vb = 1u << rng.below(10);
            while (vb == va) vb = 1u << rng.below(10);
            for (std::uint32_t x : {0u, va, vb, va ^ vb}) s.insert(base ^ x);
            const auto f = find_full_flat(s, 2);
            if (!f) {
                ok = false;
                continue;
            }
            if (f->dim() != 2 || intersection_size(s, *f) != 4) ok = false;
        }
        add(out, "energy.find_full_flat_planted", ok, "10 planted 2-flats in noise, n=10");
        add(out, "energy.full_flat_threshold_value", full_flat_threshold(4, 2) == 10.0,
            "(5/2) 2^{4/2} = 10");
        const double c2 = order2_constant(2);
        const double c3 = order2_constant(3);
        add(out, "energy.order2_constants", std::abs(c2 - 2.5) < 1e-12 && std::abs(c3 - 2.09) < 0.005,
            "C_2 = 5/2, C_3 ~ 2.09");
    }
    // energy bound report: premise fails on flats, weak bound always holds
    {
        const PointSet flat8 = PointSet::from_points(4, std::vector<Point>{0, 1, 2, 3, 4, 5, 6, 7});
        const EnergyBoundReport r1 = energy_bound_check(flat8, 0.5, 0.25);
        bool ok = !r1.premise_holds && r1.weak_bound_holds && r1.energy == r1.weak_bound;
        const PointSet s12 = random_point_set(12, 3 * 512, rng);
        const EnergyBoundReport r2 = energy_bound_check(s12, 0.75, 0.1);
        ok = ok && r2.weak_bound_holds && r2.m == 1536 && r2.k == 10;
        add(out, "energy.bound_report", ok, "flat premise fails; n=12 m=1536 report emitted");
    }
    return out;
}

// ---------------------------------------------------------------------------
// cube: handshake, compression bound, minimum cuts, multi-cube cuts
// ---------------------------------------------------------------------------

inline CheckList verify_cube(std::uint64_t seed = kDefaultSeed) {
    using namespace verify_detail;
    CheckList out;
    SplitMix64 rng(seed);

    // handshake 2e(T) + e(T, ~T) = n|T|: exhaustive n <= 4, random n <= 10
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (std::uint32_t mask = 0; mask < (1u << (1 << n)); ++mask) {
                const PointSet t = subset_from_mask(n, mask);
                if (2 * induced_edges(n, t) + crossing_edges(n, t) !=
                    static_cast<std::uint64_t>(n) * t.size())
                    ok = false;
            }
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 5 + static_cast<int>(rng.below(6));
            const PointSet t = random_point_set(n, rng.below((std::uint64_t{1} << n) + 1), rng);
            if (2 * induced_edges(n, t) + crossing_edges(n, t) !=
                static_cast<std::uint64_t>(n) * t.size())
                ok = false;
        }
        add(out, "cube.handshake", ok, "exhaustive n <= 4, random n <= 10");
    }
    // induced edges <= Psi(|T|), exhaustive n <= 4
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (std::uint32_t mask = 1; mask < (1u << (1 << n)); ++mask) {
                const PointSet t = subset_from_mask(n, mask);
                if (BigInt(induced_edges(n, t)) > psi(t.size())) ok = false;
            }
        add(out, "cube.edge_compression_bound", ok, "exhaustive n <= 4");
    }
    // lexicographic sets attain the bound, n <= 10
    {
        bool ok = true;
        for (int n = 1; n <= 10; ++n)
            for (std::uint64_t t = 1; t <= (std::uint64_t{1} << n); ++t)
                if (BigInt(induced_edges(n, lexicographic(n, t))) != psi(t)) ok = false;
        add(out, "cube.lexicographic_tightness", ok, "n <= 10, every t");
    }
    // minimum crossing count equals n t - 2 Psi(t), brute force n <= 4
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            const int u = 1 << n;
            std::vector<std::uint64_t> best(u + 1, ~std::uint64_t{0});
            for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
                const PointSet t = subset_from_mask(n, mask);
                best[t.size()] = std::min(best[t.size()], crossing_edges(n, t));
            }
            for (std::uint64_t t = 1; t + 1 <= static_cast<std::uint64_t>(u); ++t)
                if (BigInt(best[t]) != min_cut_size(n, t)) ok = false;
        }
        add(out, "cube.min_cut_exact", ok, "brute force n <= 4");
    }
    // 2^d (n-d) lower bound against actual cuts
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (std::uint32_t mask = 1; mask + 1 < (1u << (1 << n)); ++mask) {
                const PointSet t = subset_from_mask(n, mask);
                const std::uint64_t small = std::min<std::uint64_t>(
                    t.size(), (std::uint64_t{1} << n) - t.size());
                for (int d = 0; d <= n - 1; ++d) {
                    if (small < (std::uint64_t{1} << d)) continue;
                    if (crossing_edges(n, t) < cut_lower_bound(n, d)) ok = false;
                }
            }
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 5 + static_cast<int>(rng.below(8));
            const PointSet t = random_point_set(n, 1 + rng.below((std::uint64_t{1} << n) - 1), rng);
            const std::uint64_t small =
                std::min<std::uint64_t>(t.size(), (std::uint64_t{1} << n) - t.size());
            for (int d = 0; d <= n - 1; ++d) {
                if (small < (std::uint64_t{1} << d)) continue;
                if (crossing_edges(n, t) < cut_lower_bound(n, d)) ok = false;
            }
        }
        add(out, "cube.cut_lower_bound", ok, "brute force n <= 4, random n <= 12");
    }
    // monotonicity of d -> 2^d (n-d) on [0, n-1]
    {
        bool ok = true;
        for (int n = 2; n <= 20; ++n)
            for (int d = 1; d <= n - 1; ++d)
                if (cut_lower_bound(n, d) < cut_lower_bound(n, d - 1)) ok = false;
        add(out, "cube.bound_monotonicity", ok, "n <= 20");
    }
    // multi-cube cut bound
    {
        bool ok = true;
        // two isolated vertices in two copies of Q_3: 6 crossing edges >= 4
        {
            std::vector<PointSet> parts;
            PointSet a(3);
            a.insert(0);
            parts.push_back(a);
            parts.push_back(a);
            ok = multi_cube_cut_check(3, 2, 1, parts);
        }
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const int n = 3 + static_cast<int>(rng.below(4));
            const int k = 1 + static_cast<int>(rng.below(4));
            std::vector<PointSet> parts;
            std::uint64_t total = 0;
            for (int i = 0; i < k; ++i) {
                const std::uint64_t sz = 1 + rng.below(std::uint64_t{1} << (n - 1));
                parts.push_back(random_point_set(n, sz, rng));
                total += sz;
            }
            for (int d = 0; d <= n - 2; ++d) {
                if (total < (std::uint64_t{1} << d)) continue;
                if (!multi_cube_cut_check(n, k, d, parts)) ok = false;
            }
        }
        add(out, "cube.multi_cube_bound", ok, "200 random instances, n <= 6, k <= 4");
    }
    // handshake identity on the cut record type
    {
        const PointSet t = lexicographic(5, 13);
        const CubeCut c = make_cube_cut(5, t);
        add(out, "cube.cut_record", 2 * c.internal_edges_a + c.crossing == 5 * t.size());
    }
    return out;
}

// ---------------------------------------------------------------------------
// numerals: digit sums, CSD, Psi, Takagi, counting formulas
// ---------------------------------------------------------------------------

inline CheckList verify_numerals(std::uint64_t seed = kDefaultSeed) {
    using namespace verify_detail;
    CheckList out;
    SplitMix64 rng(seed);

    // s2 subadditivity on random tuples
    {
        bool ok = true;
        for (int trial = 0; trial < 10000; ++trial) {
            const int len = 2 + static_cast<int>(rng.below(5));
            std::uint64_t sum = 0;
            int digit_total = 0;
            for (int i = 0; i < len; ++i) {
                const std::uint64_t a = rng.below(std::uint64_t{1} << 40);
                sum += a;
                digit_total += s2(a);
            }
            if (s2(sum) > digit_total) ok = false;
        }
        add(out, "numerals.s2_subadditive", ok, "10^4 random tuples");
    }
    // s2* subadditivity including negatives
    {
        bool ok = true;
        for (int trial = 0; trial < 10000; ++trial) {
            const int len = 2 + static_cast<int>(rng.below(5));
            std::int64_t sum = 0;
            int digit_total = 0;
            for (int i = 0; i < len; ++i) {
                const std::int64_t a =
                    static_cast<std::int64_t>(rng.below(std::uint64_t{1} << 40)) -
                    (std::int64_t{1} << 39);
                sum += a;
                digit_total += s2_star(a);
            }
            if (s2_star(sum) > digit_total) ok = false;
        }
        add(out, "numerals.s2_star_subadditive", ok, "10^4 random tuples with negatives");
    }
    // CSD: exact value, non-adjacency, minimality, rewrite-rule agreement
    {
        bool ok = true;
        for (std::int64_t m = 0; m <= (1 << 20); ++m) {
            const CsdDigits d = to_csd(m);
            if (d.reconstruct() != m) ok = false;
            for (std::size_t i = 0; i + 1 < d.digits.size(); ++i)
                if (d.digits[i] != 0 && d.digits[i + 1] != 0) ok = false;
            if (d.nonzero_count() > s2(static_cast<std::uint64_t>(m))) ok = false;
            if (d.digits != csd_by_rewrite(static_cast<std::uint64_t>(m))) ok = false;
        }
        // negatives: roundtrip and non-adjacency
        for (int trial = 0; trial < 2000; ++trial) {
            const std::int64_t m = -static_cast<std::int64_t>(rng.below(std::uint64_t{1} << 40));
            const CsdDigits d = to_csd(m);
            if (d.reconstruct() != m) ok = false;
            for (std::size_t i = 0; i + 1 < d.digits.size(); ++i)
                if (d.digits[i] != 0 && d.digits[i + 1] != 0) ok = false;
        }
        add(out, "numerals.csd_canonical", ok, "all m <= 2^20 vs rewrite rule; random negatives");
    }
    // Psi closed form vs naive summation
    {
        bool ok = true;
        BigInt running = 0;
        for (std::uint64_t t = 1; t <= (1 << 16); ++t) {
            running += std::popcount(t - 1);
            // running == naive_psi(t), maintained incrementally
            if (psi(t) != running) {
                ok = false;
                break;
            }
        }
        ok = ok && psi(1) == 0 && psi(3) == 2 && naive_psi(100) == psi(100);
        for (int k = 1; k <= 40; ++k)
            if (psi(std::uint64_t{1} << k) != BigInt(k) * (std::uint64_t{1} << (k - 1))) ok = false;
        add(out, "numerals.psi_closed_form", ok, "t <= 2^16 vs running sum; powers to 2^40");
    }
    // Psi recursion and superadditivity
    {
        bool ok = true;
        for (std::uint64_t t = 2; t <= 512; ++t) {
            BigInt best = 0;
            for (std::uint64_t m = 1; 2 * m <= t; ++m)
                best = std::max(best, psi(m) + psi(t - m) + m);
            if (best != psi(t)) ok = false;
        }
        for (int trial = 0; trial < 2000; ++trial) {
            const int parts = 2 + static_cast<int>(rng.below(5));
            BigInt sum_psi = 0;
            std::uint64_t total = 0;
            for (int i = 0; i < parts; ++i) {
                const std::uint64_t ti = 1 + rng.below(1 << 16);
                total += ti;
                sum_psi += psi(ti);
            }
            if (psi(total) < sum_psi) ok = false;
        }
        add(out, "numerals.psi_recursion_superadditive", ok, "t <= 512 exact; 2000 random partitions");
    }
    // Takagi identity 2 Psi(t) = t d + 2^d (2x - tau(x)) for t <= 2^14
    {
        bool ok = true;
        for (std::int64_t t = 1; t <= (1 << 14); ++t) {
            const int d = 63 - std::countl_zero(static_cast<std::uint64_t>(t));
            const std::int64_t pw = std::int64_t{1} << d;
            const DyadicRational x = DyadicRational::make(t - pw, d);
            const DyadicRational tau = takagi_dyadic(x);
            // 2^d tau(x) is an integer because tau's exponent divides d
            if (tau.exponent > d) {
                ok = false;
                break;
            }
            const std::int64_t rhs =
                t * d + 2 * (t - pw) - (tau.numerator << (d - tau.exponent));
            if (BigInt(2) * psi(static_cast<std::uint64_t>(t)) != rhs) ok = false;
        }
        const DyadicRational half{1, 1};
        ok = ok && takagi_dyadic(half) == half;
        ok = ok && takagi_dyadic(DyadicRational{0, 0}) == DyadicRational{0, 0};
        add(out, "numerals.takagi_identity", ok, "exact for t <= 2^14");
    }
    // missing-value counting formulas
    {
        bool ok = missing_count_binary(4, 3) == 6;
        ok = ok && missing_count_binary(5, 7) == 17;
        ok = ok && missing_count_binary(6, 16) == 2;
        ok = ok && missing_count_csd(4, 21) == 15;
        ok = ok && missing_count_csd(5, 21) == 23;
        ok = ok && missing_count_csd(5, 5) == 7; // s2*(5) = 2, empty sum
        add(out, "numerals.missing_counts", ok);
    }
    // cross-module: binary missing count matches the exhaustive spectrum
    {
        const auto acc = forcing_table(4, 2);
        std::uint64_t absent = 0;
        for (std::uint64_t m = 0; m <= 16; ++m)
            if (!((acc[m] >> 3) & 1)) ++absent;
        add(out, "numerals.missing_vs_spectrum", BigInt(absent) == missing_count_binary(4, 3),
            "Sp(4;2,3) misses " + std::to_string(absent) + " values");
    }
    // Euler factor truncations
    {
        const PhiHalfValue one = euler_phi_half(1);
        const PhiHalfValue two = euler_phi_half(2);
        bool ok = one.numerator == 1 && one.exponent2 == 1;   // 1/2
        ok = ok && two.numerator == 3 && two.exponent2 == 3;  // 3/8
        ok = ok && std::abs(euler_phi_half(40).value() - 0.2888) <= 1e-4;
        // strict decrease, compared exactly: num' 2^e < num 2^e'
        PhiHalfValue prev = euler_phi_half(1);
        for (int terms = 2; terms <= 64; ++terms) {
            const PhiHalfValue cur = euler_phi_half(terms);
            if ((cur.numerator << prev.exponent2) >= (prev.numerator << cur.exponent2)) ok = false;
            prev = cur;
        }
        add(out, "numerals.euler_factor", ok, "exact truncations; 40 terms within 1e-4 of 0.2888");
    }
    return out;
}

inline CheckList verify_suite(const std::string& suite, std::uint64_t seed = kDefaultSeed) {
    CheckList out;
    auto append = [&](CheckList list) {
        for (auto& c : list) out.push_back(std::move(c));
    };
    if (suite == "small-spectra") append(verify_small_spectra());
    else if (suite == "profiles") append(verify_profiles(seed));
    else if (suite == "energy") append(verify_energy(seed));
    else if (suite == "cube") append(verify_cube(seed));
    else if (suite == "numerals") append(verify_numerals(seed));
    else if (suite == "all") {
        append(verify_small_spectra());
        append(verify_profiles(seed));
        append(verify_energy(seed));
        append(verify_cube(seed));
        append(verify_numerals(seed));
    } else {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    return out;
}

} // namespace flatspec
