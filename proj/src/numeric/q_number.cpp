#include "qbid/numeric/q_number.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qbid {
namespace {

void require_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1), got " + std::to_string(q));
}

void require_q(const BigRational& q) {
  if (!(q > BigRational(0) && q < BigRational(1))) {
    throw std::invalid_argument("q must lie in (0,1), got " + q.to_string());
  }
}

// 1 + b + ... + b^(m-1)
BigRational geometric_sum(std::uint64_t m, const BigRational& base) {
  BigRational sum;
  BigRational term(1);
  for (std::uint64_t i = 0; i < m; ++i) {
    sum += term;
    term *= base;
  }
  return sum;
}

}  // namespace

QPoint::QPoint(double x, double q) : x_(x), q_(q) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x must lie in [0,1], got " + std::to_string(x));
  require_q(q);
}

double q_number(double x, double q) {
  require_q(q);
  // 1 - q^x = -expm1(x log q); keeps full accuracy as q -> 1.
  return -std::expm1(x * std::log(q)) / (1.0 - q);
}

BigRational q_number(std::uint64_t x, const BigRational& q) {
  require_q(q);
  return geometric_sum(x, q);
}

double complement_q_number(double x, double q) {
  require_q(q);
  // Base b = 1/q: (1 - b^(1-x)) / (1 - b), with log b = -log q and 1 - b = -(1-q)/q.
  const double y = 1.0 - x;
  return std::expm1(-y * std::log(q)) * q / (1.0 - q);
}

BigRational complement_q_number(std::uint64_t x, const BigRational& q) {
  require_q(q);
  if (x > 1) throw std::invalid_argument("exact complement needs x in {0,1}");
  return geometric_sum(1 - x, q.inverse());
}

double complement_defect(const QPoint& p) {
  return std::abs(q_number(p.x(), p.q()) + complement_q_number(p.x(), p.q()) - 1.0);
}

BigRational complement_defect(std::uint64_t x, const BigRational& q) {
  return (q_number(x, q) + complement_q_number(x, q) - BigRational(1)).abs();
}

}  // namespace qbid
