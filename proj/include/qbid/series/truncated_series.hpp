#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qbid/poly/polynomial.hpp"

namespace qbid {

/// Formal power series in t with Polynomial coefficients, truncated after
/// t^order. Every result is truncated to the same order; combining series
/// of different orders throws std::invalid_argument.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(std::size_t order, std::vector<Polynomial> coefficients);

  /// The series 1 at the given order.
  static TruncatedSeries unit(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Polynomial> coefficients() const { return coeffs_; }
  const Polynomial& coefficient(std::size_t i) const { return coeffs_.at(i); }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const BigRational& scalar);
  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// The exponent 2X t - t^2 of the q-Hermite generating function.
TruncatedSeries series_from_argument(std::size_t order);

/// Truncated Cauchy product.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(a) = sum_{j=0}^{order} a^j / j!. Requires a zero t^0 coefficient;
/// throws std::invalid_argument otherwise.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// n! times the t^n coefficient of exp(2X t - t^2).
Polynomial extract_hermite(std::size_t n);

}  // namespace qbid
