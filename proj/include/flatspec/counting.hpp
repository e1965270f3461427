#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "flatspec/bigint.hpp"

namespace flatspec {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

// Number of k-dimensional subspaces of an n-dimensional space over F_q,
// prod_{i<k} (q^{n-i}-1)/(q^{k-i}-1). Computed by the q-Pascal recurrence
// g(n,k) = g(n-1,k-1) + q^k g(n-1,k), which stays in integers throughout.
inline BigInt gaussian_binomial(int n, int k, const BigInt& q) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: need q >= 2");
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        BigInt qpow = 1;
        const int hi = std::min(i, k);
        // sweep downward so row[] still holds the (i-1)-row values
        std::vector<BigInt> qpows(static_cast<std::size_t>(hi) + 1);
        for (int j = 0; j <= hi; ++j) {
            qpows[j] = qpow;
            qpow *= q;
        }
        for (int j = hi; j >= 1; --j) row[j] = row[j - 1] + qpows[j] * row[j];
    }
    return row[k];
}

// Number of k-flats of AG(n,q): q^{n-k} times the subspace count.
inline BigInt count_k_flats(int n, int k, const BigInt& q) {
    BigInt g = gaussian_binomial(n, k, q);
    BigInt shift = 1;
    for (int i = 0; i < n - k; ++i) shift *= q;
    return shift * g;
}

} // namespace flatspec
