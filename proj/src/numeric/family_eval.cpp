#include "qbid/numeric/family_eval.hpp"

#include <cmath>

#include "qbid/exact/combinatorics.hpp"

namespace qbid {

double eval_family_float(const FamilyTag& tag, const QPoint& p) {
  const double slot = tag.family == Family::hermite_classical ? p.x() : q_number(p.x(), p.q());
  return eval_rational(build(tag), BigRational::from_double(slot)).to_double();
}

double eval_family_direct(const FamilyTag& tag, const QPoint& p) {
  const double qx = q_number(p.x(), p.q());
  const double qy = complement_q_number(p.x(), p.q());
  const auto n = static_cast<int>(tag.n);
  const auto k = static_cast<int>(tag.k);
  switch (tag.family) {
    case Family::bernstein:
      if (k > n) return 0.0;
      return binomial(n, k).get_d() * std::pow(qx, k) * std::pow(qy, n - k);
    case Family::bernstein_reflected:
      if (k > n) return 0.0;
      return binomial(n, k).get_d() * std::pow(qy, k) * std::pow(qx, n - k);
    case Family::q_hermite_closed:
    case Family::hermite_classical: {
      const double slot = tag.family == Family::hermite_classical ? p.x() : qx;
      double sum = 0.0;
      for (int l = 0; 2 * l <= n; ++l) {
        const double term = factorial(n).get_d() / (factorial(l).get_d() * factorial(n - 2 * l).get_d()) *
                            std::pow(2.0 * slot, n - 2 * l);
        sum += (l % 2 == 0) ? term : -term;
      }
      return sum;
    }
    case Family::q_hermite_gf: {
      // Three-term recurrence H_{m+1} = 2X H_m - 2m H_{m-1}.
      double prev = 1.0;
      double cur = 2.0 * qx;
      if (n == 0) return prev;
      for (int m = 1; m < n; ++m) {
        const double next = 2.0 * qx * cur - 2.0 * m * prev;
        prev = cur;
        cur = next;
      }
      return cur;
    }
  }
  return 0.0;
}

}  // namespace qbid
