#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qbid {

/// Arbitrary-precision integer. GMP's C++ class is used directly; it already
/// has value semantics and the full operator set.
using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// input or a zero denominator.
  static BigRational parse(std::string_view text);
  /// Exact binary value of a finite double.
  static BigRational from_double(double value);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRational abs() const;
  BigRational inverse() const;

  /// Nearest double (GMP truncation toward zero is good enough here: every
  /// caller uses it only for floating-point cross-checks).
  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

}  // namespace qbid
