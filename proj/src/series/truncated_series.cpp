#include "qbid/series/truncated_series.hpp"

#include <stdexcept>
#include <string>

#include "qbid/exact/combinatorics.hpp"

namespace qbid {
namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("truncation order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Polynomial> coefficients)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::unit(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = Polynomial::constant(1);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries series_from_argument(std::size_t order) {
  std::vector<Polynomial> coeffs(order + 1);
  if (order >= 1) coeffs[1] = Polynomial::monomial(2, 1);
  if (order >= 2) coeffs[2] = Polynomial::constant(-1);
  return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  std::vector<Polynomial> out(order + 1);
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  for (std::size_t i = 0; i <= order; ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (bc[j].is_zero()) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!a.coefficient(0).is_zero()) {
    throw std::invalid_argument("series_exp: nonzero constant term " + to_text(a.coefficient(0)));
  }
  const std::size_t order = a.order();
  TruncatedSeries sum = TruncatedSeries::unit(order);
  TruncatedSeries power = TruncatedSeries::unit(order);
  // a^j starts at t^j, so terms with j > order vanish after truncation.
  for (std::size_t j = 1; j <= order; ++j) {
    power = series_mul(power, a);
    TruncatedSeries term = power;
    term *= BigRational(1) / BigRational(factorial(static_cast<std::int64_t>(j)));
    sum += term;
  }
  return sum;
}

Polynomial extract_hermite(std::size_t n) {
  const TruncatedSeries gf = series_exp(series_from_argument(n));
  return gf.coefficient(n) * BigRational(factorial(static_cast<std::int64_t>(n)));
}

}  // namespace qbid
