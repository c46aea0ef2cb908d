#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbid/exact/big_rational.hpp"

namespace qbid {

/// Dense univariate polynomial over the rationals in the formal symbol X.
///
/// Index i of the coefficient vector holds the coefficient of X^i. Trailing
/// zeros are always stripped, so the zero polynomial is the empty vector and
/// equality is plain vector equality.
class Polynomial {
 public:
  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);
  Polynomial(std::initializer_list<BigRational> coefficients);

  static Polynomial constant(const BigRational& c);
  /// c * X^power.
  static Polynomial monomial(const BigRational& c, std::size_t power);
  /// The formal symbol X itself.
  static Polynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  /// Highest index with a nonzero coefficient; kZeroDegree for the zero polynomial.
  std::int64_t degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::span<const BigRational> coefficients() const { return coeffs_; }
  /// Coefficient of X^i, zero beyond the degree.
  BigRational coefficient(std::size_t i) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);

/// a^e with a^0 = 1, including 0^0 = 1.
Polynomial pow(const Polynomial& a, std::uint64_t e);

/// order-fold formal derivative d/dX. Orders above the degree give zero.
Polynomial derive(const Polynomial& a, std::uint64_t order);

/// Exact Horner evaluation at a rational point.
BigRational eval_rational(const Polynomial& a, const BigRational& x0);

/// Horner evaluation in double precision after rounding each coefficient.
double eval_double(const Polynomial& a, double x0);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Canonical text: descending powers, explicit "*" and "^", rationals as
/// "p/q", single spaces around binary +/-, and "0" for the zero polynomial.
std::string to_text(const Polynomial& a);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  /// Zero-based offset of the first malformed token.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Inverse of to_text. Also accepts non-canonical term order, repeated
/// powers (summed), and arbitrary blanks between tokens.
Polynomial parse(std::string_view text);

}  // namespace qbid
