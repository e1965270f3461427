#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "flatspec/point_set.hpp"

namespace flatspec {

namespace detail {

// Degree of a polynomial word, -1 for the zero polynomial.
inline int poly_degree(std::uint32_t p) { return p ? 31 - std::countl_zero(p) : -1; }

inline std::uint32_t poly_mod(std::uint64_t a, std::uint32_t m) {
    const int dm = 31 - std::countl_zero(m);
    while (a) {
        const int da = 63 - std::countl_zero(a);
        if (da < dm) break;
        a ^= static_cast<std::uint64_t>(m) << (da - dm);
    }
    return static_cast<std::uint32_t>(a);
}

} // namespace detail

inline bool is_irreducible_poly(std::uint32_t p) {
    const int d = 31 - std::countl_zero(p);
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e)
        for (std::uint32_t q = 1u << e; q < (2u << e); ++q)
            if (detail::poly_mod(p, q) == 0) return false;
    return true;
}

// Lexicographically smallest irreducible polynomial of degree e over F_2.
inline std::uint32_t smallest_irreducible(int e) {
    if (e < 1 || e > 16) throw std::invalid_argument("smallest_irreducible: degree outside [1, 16]");
    for (std::uint32_t p = 1u << e; p < (2u << e); ++p)
        if (is_irreducible_poly(p)) return p;
    throw std::logic_error("smallest_irreducible: none found"); // unreachable
}

// Element of GF(2^e) in polynomial basis modulo a fixed irreducible modulus.
class FieldElement {
public:
    FieldElement(int degree, std::uint32_t poly, std::uint32_t modulus)
        : degree_(degree), poly_(poly), modulus_(modulus) {
        if (degree < 1 || degree > 16) throw std::invalid_argument("FieldElement: degree outside [1, 16]");
        if (detail::poly_degree(modulus) != degree || !is_irreducible_poly(modulus))
            throw std::invalid_argument("FieldElement: modulus is not an irreducible polynomial of the stated degree");
        if (poly >> degree) throw std::out_of_range("FieldElement: representative outside the field");
    }

    int degree() const { return degree_; }
    std::uint32_t poly() const { return poly_; }
    std::uint32_t modulus() const { return modulus_; }

    FieldElement operator+(const FieldElement& other) const {
        check_compatible(other);
        return FieldElement(unchecked{}, degree_, poly_ ^ other.poly_, modulus_);
    }

    FieldElement operator*(const FieldElement& other) const {
        check_compatible(other);
        // carry-less product, then reduce
        std::uint64_t acc = 0;
        std::uint64_t a = poly_;
        std::uint32_t b = other.poly_;
        while (b) {
            acc ^= a << std::countr_zero(b);
            b &= b - 1;
        }
        return FieldElement(unchecked{}, degree_, detail::poly_mod(acc, modulus_), modulus_);
    }

    bool operator==(const FieldElement& other) const {
        return degree_ == other.degree_ && poly_ == other.poly_ && modulus_ == other.modulus_;
    }

private:
    struct unchecked {};
    FieldElement(unchecked, int degree, std::uint32_t poly, std::uint32_t modulus)
        : degree_(degree), poly_(poly), modulus_(modulus) {}

    void check_compatible(const FieldElement& other) const {
        if (modulus_ != other.modulus_ || degree_ != other.degree_)
            throw std::invalid_argument("FieldElement: modulus mismatch");
    }

    int degree_;
    std::uint32_t poly_;
    std::uint32_t modulus_;
};

inline FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

// The set {(x, x^3) : x in GF(2^{n/2})} in F_2^n, with x in the high n/2
// coordinates and x^3 in the low ones. Sidon: all pairwise sums distinct.
inline PointSet bose_set(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("bose_set: n must be even and at least 2");
    if (n > kMaxPointSetDim) throw std::invalid_argument("bose_set: n exceeds the point set cap");
    const int e = n / 2;
    const std::uint32_t mod = smallest_irreducible(e);
    PointSet s(n);
    for (std::uint32_t x = 0; x < (1u << e); ++x) {
        const FieldElement fx(e, x, mod);
        const std::uint32_t cube = (fx * fx * fx).poly();
        s.insert((x << e) | cube);
    }
    return s;
}

} // namespace flatspec
