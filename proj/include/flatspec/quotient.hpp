#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "flatspec/point_set.hpp"

namespace flatspec {

// Linear projection F_2^n -> F_2^{n-1} with kernel <d>. The matrix is built
// by extending {d} to a basis with standard basis vectors taken in index
// order, then inverting; row i of the inverse (skipping the d-coordinate)
// gives output bit i as a parity mask.
class QuotientMap {
public:
    static QuotientMap quotient_by(int n, Point d) {
        check_dim(n, kMaxPointSetDim, "QuotientMap");
        if (n < 2) throw std::invalid_argument("QuotientMap: source dimension must be at least 2");
        if (d == 0) throw std::invalid_argument("QuotientMap: kernel vector must be nonzero");
        if (n < 32 && (d >> n) != 0) throw std::out_of_range("QuotientMap: kernel outside F_2^n");

        QuotientMap q;
        q.n_ = n;
        q.d_ = d;

        // columns of the change-of-basis matrix: d first, then greedy e_j
        std::array<Point, 32> cols{};
        std::array<Point, 32> echelon{}; // for the independence test only
        int rank = 0;
        auto try_add = [&](Point v) {
            Point r = v;
            for (int i = 0; i < rank; ++i) {
                const int p = 31 - std::countl_zero(echelon[i]);
                if ((r >> p) & 1) r ^= echelon[i];
            }
            if (r == 0) return false;
            echelon[rank] = r;
            cols[rank] = v;
            ++rank;
            return true;
        };
        try_add(d);
        for (int j = 0; j < n && rank < n; ++j) try_add(Point{1} << j);

        // invert: rows of M as masks over the coordinate basis, M columns = cols[]
        std::array<std::uint64_t, 32> aug{}; // low n bits: row of M, high: identity
        for (int r = 0; r < n; ++r) {
            std::uint64_t row = 0;
            for (int c = 0; c < n; ++c)
                if ((cols[c] >> r) & 1) row |= std::uint64_t{1} << c;
            aug[r] = row | (std::uint64_t{1} << (n + r));
        }
        for (int c = 0; c < n; ++c) {
            int pivot = -1;
            for (int r = c; r < n; ++r)
                if ((aug[r] >> c) & 1) {
                    pivot = r;
                    break;
                }
            std::swap(aug[c], aug[pivot]);
            for (int r = 0; r < n; ++r)
                if (r != c && ((aug[r] >> c) & 1)) aug[r] ^= aug[c];
        }
        // aug[c] high part is now row c of M^{-1}; coordinate 0 is the
        // d-coordinate, which the projection drops.
        for (int i = 0; i + 1 < n; ++i) {
            q.proj_rows_[i] = static_cast<Point>((aug[i + 1] >> n) & ((1u << n) - 1));
            q.section_basis_[i] = cols[i + 1];
        }
        return q;
    }

    int source_dim() const { return n_; }
    int target_dim() const { return n_ - 1; }
    Point kernel() const { return d_; }

    Point apply(Point x) const {
        Point y = 0;
        for (int i = 0; i + 1 < n_; ++i)
            y |= static_cast<Point>(std::popcount(x & proj_rows_[i]) & 1) << i;
        return y;
    }

    // Right inverse: apply(section(y)) == y for every y in F_2^{n-1}.
    Point section(Point y) const {
        Point x = 0;
        for (int i = 0; i + 1 < n_; ++i)
            if ((y >> i) & 1) x ^= section_basis_[i];
        return x;
    }

    Point projection_row(int i) const { return proj_rows_[i]; }

private:
    QuotientMap() = default;

    int n_ = 0;
    Point d_ = 0;
    std::array<Point, 32> proj_rows_{};
    std::array<Point, 32> section_basis_{};
};

inline QuotientMap quotient_by(int n, Point d) { return QuotientMap::quotient_by(n, d); }

// Points of the quotient whose <d>-fiber {s, s+d} meets S in exactly t points.
inline PointSet push_coset_counts(const PointSet& s, const QuotientMap& q, int t) {
    if (t < 0 || t > 2) throw std::invalid_argument("push_coset_counts: t must be 0, 1 or 2");
    if (s.dim() != q.source_dim())
        throw std::invalid_argument("push_coset_counts: ambient dimension mismatch");
    PointSet out(q.target_dim());
    const std::uint64_t u = std::uint64_t{1} << q.target_dim();
    for (std::uint64_t y = 0; y < u; ++y) {
        const Point rep = q.section(static_cast<Point>(y));
        const int c = (s.contains(rep) ? 1 : 0) + (s.contains(rep ^ q.kernel()) ? 1 : 0);
        if (c == t) out.insert(static_cast<Point>(y));
    }
    return out;
}

} // namespace flatspec
