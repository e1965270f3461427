#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "flatspec/bigint.hpp"
#include "flatspec/counting.hpp"

namespace flatspec {

// Binary digit sum.
inline int s2(std::uint64_t m) { return std::popcount(m); }

// Positions of the 1-bits, ascending.
inline std::vector<int> supp(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Canonical signed-digit (non-adjacent form) representation: digits over
// {-1, 0, +1}, least significant first, no two consecutive nonzero digits,
// and the fewest nonzero digits among all signed-digit binary forms.
struct CsdDigits {
    std::vector<int> digits;
    std::int64_t value = 0;

    int nonzero_count() const {
        int c = 0;
        for (int d : digits) c += d != 0;
        return c;
    }

    std::int64_t reconstruct() const {
        std::int64_t v = 0;
        std::int64_t w = 1;
        for (int d : digits) {
            v += d * w;
            w <<= 1;
        }
        return v;
    }
};

// Residue-mod-4 recurrence: an odd m emits 2 - (m mod 4), which forces the
// next digit to zero.
inline CsdDigits to_csd(std::int64_t m) {
    CsdDigits out;
    out.value = m;
    while (m != 0) {
        if (m & 1) {
            const int d = 2 - static_cast<int>(((m % 4) + 4) % 4);
            out.digits.push_back(d);
            m -= d;
        } else {
            out.digits.push_back(0);
        }
        m /= 2;
    }
    return out;
}

// Number of nonzero digits in the CSD form.
inline int s2_star(std::int64_t m) { return to_csd(m).nonzero_count(); }

// Psi(t) = sum_{i<t} s2(i), by counting 1-bits per position across [0, t).
inline BigInt psi(std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("psi: t must be positive");
    if (t > (std::uint64_t{1} << 62)) throw std::invalid_argument("psi: t exceeds 2^62");
    unsigned __int128 total = 0;
    for (int j = 0; (std::uint64_t{1} << j) < t; ++j) {
        const std::uint64_t half = std::uint64_t{1} << j;
        const std::uint64_t block = half << 1;
        const std::uint64_t cycles = t / block;
        const std::uint64_t rem = t % block;
        total += static_cast<unsigned __int128>(cycles) * half + (rem > half ? rem - half : 0);
    }
    BigInt r = static_cast<std::uint64_t>(total >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(total);
    return r;
}

// value = numerator / 2^exponent in lowest terms (numerator odd or zero).
struct DyadicRational {
    std::int64_t numerator = 0;
    int exponent = 0;

    static DyadicRational make(std::int64_t num, int expo) {
        if (expo < 0) throw std::invalid_argument("DyadicRational: negative exponent");
        while (num != 0 && (num & 1) == 0 && expo > 0) {
            num >>= 1;
            --expo;
        }
        if (num == 0) expo = 0;
        return {num, expo};
    }

    bool operator==(const DyadicRational& o) const {
        return numerator == o.numerator && exponent == o.exponent;
    }
};

// Takagi function at a dyadic rational in [0,1]: the series
// sum_j dist(2^j x, Z) / 2^j has finitely many nonzero terms, all with
// denominator 2^e, so the value is exact.
inline DyadicRational takagi_dyadic(const DyadicRational& x) {
    const std::int64_t a = x.numerator;
    const int e = x.exponent;
    if (a < 0 || a > (std::int64_t{1} << e))
        throw std::invalid_argument("takagi_dyadic: argument outside [0, 1]");
    std::int64_t sum = 0; // of dist numerators over the common denominator 2^e
    for (int j = 0; j < e; ++j) {
        const std::int64_t den = std::int64_t{1} << (e - j);
        const std::int64_t r = a % den;
        sum += std::min(r, den - r);
    }
    return DyadicRational::make(sum, e);
}

// 1 + sum_{i < s2(t)} C(n, i): the number of values m in [0, 2^n] whose
// binary digit sum is smaller than that of t. Meaningful for the spectrum
// of [k,t]-flats when 0 < t < 2^k; evaluated as a formula for any t > 0.
inline BigInt missing_count_binary(int n, std::uint64_t t) {
    if (n < 1 || n > 1024) throw std::invalid_argument("missing_count_binary: n outside [1, 1024]");
    if (t == 0) throw std::invalid_argument("missing_count_binary: t must be positive");
    BigInt total = 1;
    for (int i = 0; i < s2(t); ++i) total += binomial(n, i);
    return total;
}

// CSD analogue: n+2 + (1/2) sum_{i=2}^{s2*(t)-1} [C(n+1-i,i) 2^i + C(n+1-i,i-1) 2^{i-1}].
inline BigInt missing_count_csd(int n, std::uint64_t t) {
    if (n < 1 || n > 1024) throw std::invalid_argument("missing_count_csd: n outside [1, 1024]");
    if (t == 0) throw std::invalid_argument("missing_count_csd: t must be positive");
    BigInt total = n + 2;
    const int s = s2_star(static_cast<std::int64_t>(t));
    for (int i = 2; i <= s - 1; ++i) {
        BigInt term = binomial(n + 1 - i, i) * (BigInt(1) << (i - 1));
        term += binomial(n + 1 - i, i - 1) * (BigInt(1) << (i - 2));
        total += term;
    }
    return total;
}

// Truncation of prod_k (1 - 2^{-k}), exactly: numerator over 2^{1+2+...+terms}.
struct PhiHalfValue {
    BigInt numerator;
    unsigned exponent2 = 0;

    double value() const {
        // top bits / 2^(exponent2 - shift)
        BigInt n = numerator;
        unsigned shift = 0;
        while (n >> 64 != 0) {
            n >>= 1;
            ++shift;
        }
        const double top = static_cast<double>(n.convert_to<std::uint64_t>());
        return std::ldexp(top, static_cast<int>(shift) - static_cast<int>(exponent2));
    }
};

inline PhiHalfValue euler_phi_half(int terms) {
    if (terms < 1) throw std::invalid_argument("euler_phi_half: terms must be positive");
    PhiHalfValue v{BigInt(1), 0};
    for (int k = 1; k <= terms; ++k) {
        v.numerator *= (BigInt(1) << k) - 1;
        v.exponent2 += static_cast<unsigned>(k);
    }
    return v;
}

} // namespace flatspec
