#pragma once

// Test-only brute-force oracles. Nothing here calls into the library's
// combinatorics, series or family code.

#include <cstdint>
#include <map>
#include <vector>

#include "qbid/poly/polynomial.hpp"

namespace qbid::oracle {

/// Pascal's triangle by additions only.
inline std::vector<std::vector<BigInt>> pascal(int rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, BigInt(1));
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

inline BigInt factorial_by_multiplication(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Coefficients of X^i in n! [t^n] exp(2Xt - t^2), by expanding the
/// product of the two exponential series term by term into a map.
inline std::map<int, BigRational> hermite_by_product(int n) {
  std::map<int, BigRational> coeffs;
  const BigInt nf = factorial_by_multiplication(n);
  // (2X t)^m / m! * (-t^2)^l / l! contributes to t^(m+2l).
  for (int l = 0; 2 * l <= n; ++l) {
    const int m = n - 2 * l;
    BigInt two_m = 1;
    for (int i = 0; i < m; ++i) two_m *= 2;
    BigRational c(nf * two_m, factorial_by_multiplication(m) * factorial_by_multiplication(l));
    if (l % 2 == 1) c = -c;
    coeffs[m] += c;
  }
  return coeffs;
}

inline Polynomial from_map(const std::map<int, BigRational>& m) {
  int deg = m.empty() ? -1 : m.rbegin()->first;
  std::vector<BigRational> v(static_cast<std::size_t>(deg + 1));
  for (const auto& [i, c] : m) v[static_cast<std::size_t>(i)] = c;
  return Polynomial(std::move(v));
}

/// C(n,k) X^k (1-X)^(n-k) expanded with the binomial theorem (Pascal values).
inline Polynomial bernstein_by_binomial_theorem(int k, int n) {
  if (k < 0 || k > n) return {};
  const auto t = pascal(n);
  std::vector<BigRational> v(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n - k; ++j) {
    BigRational c(BigInt(t[n][k] * t[n - k][j]));
    if (j % 2 == 1) c = -c;
    v[static_cast<std::size_t>(k + j)] += c;
  }
  return Polynomial(std::move(v));
}

}  // namespace qbid::oracle
