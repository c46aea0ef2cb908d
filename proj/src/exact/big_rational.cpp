#include "qbid/exact/big_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace qbid {
namespace {

bool is_unsigned_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through mpz.
  mpz_class z;
  const bool negative = value < 0;
  const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(value) : static_cast<std::uint64_t>(value);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(magnitude), 0, 0, &magnitude);
  if (negative) z = -z;
  value_ = mpq_class(z);
}

BigRational::BigRational(const BigInt& value) : value_(value) {}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_unsigned_digits(num_part) || !is_unsigned_digits(den_part)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_part), 10);
  BigInt den(std::string(den_part), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return BigRational(num, den);
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("BigRational: non-finite double");
  return BigRational(mpq_class(value));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return BigRational(std::move(r));
}

std::string BigRational::to_string() const { return value_.get_str(10); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

}  // namespace qbid
