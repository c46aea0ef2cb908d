#pragma once

#include <cstdint>

#include "qbid/exact/big_rational.hpp"

namespace qbid {

/// A point (x, q) with 0 <= x <= 1 and 0 < q < 1, checked at construction.
class QPoint {
 public:
  /// Throws std::invalid_argument when out of range.
  QPoint(double x, double q);

  double x() const { return x_; }
  double q() const { return q_; }

 private:
  double x_;
  double q_;
};

/// [x]_q = (1 - q^x) / (1 - q). Throws std::invalid_argument unless 0 < q < 1.
double q_number(double x, double q);

/// [x]_q = 1 + q + ... + q^(x-1) for integer x >= 0, exactly.
/// Throws std::invalid_argument unless 0 < q < 1.
BigRational q_number(std::uint64_t x, const BigRational& q);

/// [1-x]_{1/q} evaluated from its own definition with base 1/q, not as 1 - [x]_q.
double complement_q_number(double x, double q);

/// [1-x]_{1/q} exactly, for x in {0, 1}.
BigRational complement_q_number(std::uint64_t x, const BigRational& q);

/// |[x]_q + [1-x]_{1/q} - 1|.
double complement_defect(const QPoint& p);

/// Exact defect for integer x in {0, 1}; throws std::invalid_argument otherwise.
BigRational complement_defect(std::uint64_t x, const BigRational& q);

}  // namespace qbid
