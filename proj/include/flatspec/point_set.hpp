#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatspec {

// A point of F_2^n is an n-bit word: coordinate x_i is bit i.
using Point = std::uint32_t;

// Occupancy vectors hold 2^n bits; 16 Mi bits at the cap.
inline constexpr int kMaxPointSetDim = 24;
// Full k-flat enumeration is only accepted up to this ambient dimension.
inline constexpr int kMaxEnumerationDim = 14;
// Hypercube edge scans iterate all 2^n vertices.
inline constexpr int kMaxCubeDim = 20;
// Difference tables and pair scans allocate 2^n counters.
inline constexpr int kMaxDiffDim = 20;

inline void check_dim(int n, int cap, const char* what) {
    if (n < 1 || n > cap)
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                                    " outside [1, " + std::to_string(cap) + "]");
}

// Subset of F_2^n as a 2^n-bit occupancy vector with cached cardinality.
class PointSet {
public:
    explicit PointSet(int n) : n_(n), card_(0) {
        check_dim(n, kMaxPointSetDim, "PointSet");
        words_.resize(word_count(), 0);
    }

    static PointSet full(int n) {
        PointSet s(n);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        const std::uint64_t u = s.universe_size();
        if (u % 64 != 0) s.words_.back() &= (std::uint64_t{1} << (u % 64)) - 1;
        s.card_ = u;
        return s;
    }

    template <typename Container>
    static PointSet from_points(int n, const Container& pts) {
        PointSet s(n);
        for (Point p : pts) s.insert(p);
        return s;
    }

    int dim() const { return n_; }
    std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }
    std::uint64_t size() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool contains(Point p) const {
        return (words_[p >> 6] >> (p & 63)) & 1;
    }

    void insert(Point p) {
        check_point(p);
        std::uint64_t& w = words_[p >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (p & 63);
        if (!(w & bit)) {
            w |= bit;
            ++card_;
        }
    }

    void erase(Point p) {
        check_point(p);
        std::uint64_t& w = words_[p >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (p & 63);
        if (w & bit) {
            w &= ~bit;
            --card_;
        }
    }

    PointSet complement() const {
        PointSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        const std::uint64_t u = universe_size();
        if (u % 64 != 0) s.words_.back() &= (std::uint64_t{1} << (u % 64)) - 1;
        s.card_ = u - card_;
        return s;
    }

    // The set {x + w : x in S}.
    PointSet translated(Point w) const {
        check_point(w);
        PointSet s(n_);
        for_each_point([&](Point p) { s.insert(p ^ w); });
        return s;
    }

    PointSet unite(const PointSet& other) const {
        check_same_dim(other);
        PointSet s(n_);
        s.card_ = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            s.words_[i] = words_[i] | other.words_[i];
            s.card_ += std::popcount(s.words_[i]);
        }
        return s;
    }

    PointSet subtract(const PointSet& other) const {
        check_same_dim(other);
        PointSet s(n_);
        s.card_ = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            s.words_[i] = words_[i] & ~other.words_[i];
            s.card_ += std::popcount(s.words_[i]);
        }
        return s;
    }

    PointSet intersect(const PointSet& other) const {
        check_same_dim(other);
        PointSet s(n_);
        s.card_ = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            s.words_[i] = words_[i] & other.words_[i];
            s.card_ += std::popcount(s.words_[i]);
        }
        return s;
    }

    std::uint64_t intersection_count(const PointSet& other) const {
        check_same_dim(other);
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    template <typename Fn>
    void for_each_point(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                fn(static_cast<Point>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<Point> points() const {
        std::vector<Point> out;
        out.reserve(card_);
        for_each_point([&](Point p) { out.push_back(p); });
        return out;
    }

    bool operator==(const PointSet& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }
    bool operator!=(const PointSet& other) const { return !(*this == other); }

private:
    std::size_t word_count() const {
        const std::uint64_t u = universe_size();
        return static_cast<std::size_t>((u + 63) / 64);
    }

    void check_point(Point p) const {
        if (p >= universe_size())
            throw std::out_of_range("PointSet: point " + std::to_string(p) +
                                    " outside F_2^" + std::to_string(n_));
    }

    void check_same_dim(const PointSet& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("PointSet: ambient dimension mismatch");
    }

    int n_;
    std::vector<std::uint64_t> words_;
    std::uint64_t card_;
};

} // namespace flatspec
