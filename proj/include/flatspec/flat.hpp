#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "flatspec/point_set.hpp"

namespace flatspec {

// A k-dimensional affine subspace of F_2^n in canonical form:
//   - basis rows in reduced row echelon form, ordered by descending pivot
//     (pivot = most significant set bit; every row is zero at the other
//     rows' pivots),
//   - offset zero at every pivot position.
// Two flats are equal iff their fields are equal.
class Flat {
public:
    static constexpr int kMaxDim = kMaxPointSetDim;

    Flat(int n, std::span<const Point> basis, Point offset) {
        check_dim(n, kMaxPointSetDim, "Flat");
        n_ = static_cast<std::uint8_t>(n);
        k_ = 0;
        offset_ = 0;
        for (Point v : basis) {
            check_word(v, n);
            if (!insert_row(v))
                throw std::invalid_argument("Flat: basis vectors are linearly dependent");
        }
        check_word(offset, n);
        offset_ = reduce(offset);
    }

    // Affine span of a nonempty point list; dimension is the rank of the
    // difference set.
    static Flat affine_span(int n, std::span<const Point> pts) {
        if (pts.empty()) throw std::invalid_argument("Flat::affine_span: empty point list");
        Flat f(n);
        for (Point p : pts) check_word(p, n);
        const Point base = pts.front();
        for (Point p : pts.subspan(1)) f.insert_row(p ^ base);
        f.offset_ = f.reduce(base);
        return f;
    }

    int ambient_dim() const { return n_; }
    int dim() const { return k_; }
    Point offset() const { return offset_; }
    std::span<const Point> basis() const { return {basis_.data(), static_cast<std::size_t>(k_)}; }
    std::uint64_t point_count() const { return std::uint64_t{1} << k_; }

    bool contains(Point p) const { return reduce(p ^ offset_) == 0; }

    // Visits all 2^k points; Gray-code walk, one xor per step.
    template <typename Fn>
    void for_each_point(Fn&& fn) const {
        Point cur = offset_;
        fn(cur);
        const std::uint64_t total = point_count();
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= basis_[std::countr_zero(i)];
            fn(cur);
        }
    }

    std::vector<Point> points() const {
        std::vector<Point> out;
        out.reserve(point_count());
        for_each_point([&](Point p) { out.push_back(p); });
        return out;
    }

    bool operator==(const Flat& other) const {
        if (n_ != other.n_ || k_ != other.k_ || offset_ != other.offset_) return false;
        for (int i = 0; i < k_; ++i)
            if (basis_[i] != other.basis_[i]) return false;
        return true;
    }
    bool operator!=(const Flat& other) const { return !(*this == other); }

    bool operator<(const Flat& other) const {
        if (n_ != other.n_) return n_ < other.n_;
        if (k_ != other.k_) return k_ < other.k_;
        for (int i = 0; i < k_; ++i)
            if (basis_[i] != other.basis_[i]) return basis_[i] < other.basis_[i];
        return offset_ < other.offset_;
    }

private:
    explicit Flat(int n) : n_(static_cast<std::uint8_t>(n)), k_(0), offset_(0) {
        check_dim(n, kMaxPointSetDim, "Flat");
    }

    static void check_word(Point w, int n) {
        if (n < 32 && (w >> n) != 0)
            throw std::out_of_range("Flat: word outside F_2^n");
    }

    // Eliminates v against the current rows; if a new pivot remains, inserts
    // it and back-substitutes so the rows stay in reduced echelon form.
    bool insert_row(Point v) {
        v = reduce(v);
        if (v == 0) return false;
        const int pivot = 31 - std::countl_zero(v);
        int pos = 0;
        while (pos < k_ && top_bit(basis_[pos]) > pivot) ++pos;
        for (int i = k_; i > pos; --i) basis_[i] = basis_[i - 1];
        basis_[pos] = v;
        ++k_;
        for (int i = 0; i < k_; ++i) {
            if (i != pos && ((basis_[i] >> pivot) & 1)) basis_[i] ^= v;
        }
        return true;
    }

    Point reduce(Point v) const {
        for (int i = 0; i < k_; ++i) {
            const int p = top_bit(basis_[i]);
            if ((v >> p) & 1) v ^= basis_[i];
        }
        return v;
    }

    static int top_bit(Point v) { return 31 - std::countl_zero(v); }

    std::uint8_t n_;
    std::uint8_t k_;
    Point offset_;
    std::array<Point, kMaxDim> basis_{};

    friend class FlatEnumerator;
};

inline std::uint64_t intersection_size(const PointSet& s, const Flat& h) {
    if (s.dim() != h.ambient_dim())
        throw std::invalid_argument("intersection_size: ambient dimension mismatch");
    std::uint64_t c = 0;
    h.for_each_point([&](Point p) { c += s.contains(p) ? 1 : 0; });
    return c;
}

// Streams every k-flat of F_2^n exactly once, in canonical form, in a fixed
// deterministic order: pivot patterns by ascending mask, then free-entry
// fills, then offsets. Each pattern is a Schubert cell, so the total count
// matches 2^{n-k} [n choose k]_2 by construction.
class FlatEnumerator {
public:
    FlatEnumerator(int n, int k) : n_(n), k_(k) {
        check_dim(n, kMaxEnumerationDim, "FlatEnumerator");
        if (k < 0 || k > n) throw std::invalid_argument("FlatEnumerator: need 0 <= k <= n");
    }

    // fn(const Flat&); the reference is only valid during the call.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for_each_sharded(1, 0, std::forward<Fn>(fn));
    }

    // fn returns false to stop; returns true when the stream was exhausted.
    template <typename Fn>
    bool for_each_while(Fn&& fn) const {
        bool done = true;
        for_each_sharded_while(1, 0, [&](const Flat& f) {
            if (!fn(f)) {
                done = false;
                return false;
            }
            return true;
        });
        return done;
    }

    // Round-robin sharding over pivot patterns + fills; shard 0..jobs-1.
    template <typename Fn>
    void for_each_sharded(int jobs, int shard, Fn&& fn) const {
        for_each_sharded_while(jobs, shard, [&](const Flat& f) {
            fn(f);
            return true;
        });
    }

    template <typename Fn>
    bool for_each_sharded_while(int jobs, int shard, Fn&& fn) const {
        Flat f(n_);
        f.k_ = static_cast<std::uint8_t>(k_);
        std::uint64_t cell_index = 0;
        for (std::uint32_t pattern = 0; pattern < (1u << n_); ++pattern) {
            if (std::popcount(pattern) != k_) continue;
            // pivots descending
            std::array<int, Flat::kMaxDim> pivots{};
            {
                int idx = 0;
                for (int b = n_ - 1; b >= 0; --b)
                    if ((pattern >> b) & 1) pivots[idx++] = b;
            }
            // free slots: per row, non-pivot positions below its own pivot
            std::array<std::pair<int, int>, 256> slots{}; // (row, bit)
            int free_total = 0;
            for (int r = 0; r < k_; ++r)
                for (int b = pivots[r] - 1; b >= 0; --b)
                    if (!((pattern >> b) & 1)) slots[free_total++] = {r, b};
            // offset positions: non-pivot coordinates, ascending
            std::array<int, Flat::kMaxDim> off_pos{};
            int off_count = 0;
            for (int b = 0; b < n_; ++b)
                if (!((pattern >> b) & 1)) off_pos[off_count++] = b;

            for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_total); ++fill, ++cell_index) {
                if (static_cast<int>(cell_index % jobs) != shard) continue;
                for (int r = 0; r < k_; ++r) f.basis_[r] = Point{1} << pivots[r];
                for (int s = 0; s < free_total; ++s)
                    if ((fill >> s) & 1) f.basis_[slots[s].first] |= Point{1} << slots[s].second;
                for (std::uint64_t o = 0; o < (std::uint64_t{1} << off_count); ++o) {
                    Point offset = 0;
                    for (int b = 0; b < off_count; ++b)
                        if ((o >> b) & 1) offset |= Point{1} << off_pos[b];
                    f.offset_ = offset;
                    if (!fn(static_cast<const Flat&>(f))) return false;
                }
            }
        }
        return true;
    }

private:
    int n_;
    int k_;
};

template <typename Fn>
inline void for_each_k_flat(int n, int k, Fn&& fn) {
    FlatEnumerator(n, k).for_each(std::forward<Fn>(fn));
}

inline std::vector<Flat> all_k_flats(int n, int k) {
    std::vector<Flat> out;
    for_each_k_flat(n, k, [&](const Flat& f) { out.push_back(f); });
    return out;
}

// Walsh transform of the indicator: W[a] = sum_{x in S} (-1)^{a.x}.
inline std::vector<std::int64_t> walsh_spectrum(const PointSet& s) {
    const std::uint64_t u = s.universe_size();
    std::vector<std::int64_t> f(u, 0);
    s.for_each_point([&](Point p) { f[p] = 1; });
    for (std::uint64_t len = 1; len < u; len <<= 1)
        for (std::uint64_t i = 0; i < u; i += len << 1)
            for (std::uint64_t j = i; j < i + len; ++j) {
                const std::int64_t a = f[j], b = f[j + len];
                f[j] = a + b;
                f[j + len] = a - b;
            }
    return f;
}

// Linear hyperplane {x : a.x = 0} whose intersection with S is closest to
// m/2; ties broken by the smallest normal word a. The returned count always
// lies in [m/2 - sqrt(m)/2, m/2 + sqrt(m)/2].
inline Flat balanced_hyperplane(const PointSet& s) {
    const int n = s.dim();
    const std::uint64_t m = s.size();
    const auto w = walsh_spectrum(s);
    Point best_a = 1;
    // |H_a ∩ S| = (m + W[a]) / 2, so distance to m/2 is |W[a]| / 2.
    std::int64_t best_abs = w[1] < 0 ? -w[1] : w[1];
    for (std::uint64_t a = 2; a < s.universe_size(); ++a) {
        const std::int64_t v = w[a] < 0 ? -w[a] : w[a];
        if (v < best_abs) {
            best_abs = v;
            best_a = static_cast<Point>(a);
        }
    }
    if (static_cast<std::uint64_t>(best_abs * best_abs) > m)
        throw std::logic_error("balanced_hyperplane: balance window violated");
    const int p = 31 - std::countl_zero(best_a);
    std::vector<Point> basis;
    for (int j = 0; j < n; ++j) {
        if (j == p) continue;
        Point v = Point{1} << j;
        if ((best_a >> j) & 1) v ^= Point{1} << p;
        basis.push_back(v);
    }
    return Flat(n, basis, 0);
}

} // namespace flatspec
