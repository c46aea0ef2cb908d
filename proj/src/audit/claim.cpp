#include "qbid/audit/claim.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbid::audit {

Fraction::Fraction(Polynomial num, Polynomial den) : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero()) throw std::domain_error("Fraction: zero denominator");
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.denominator == b.denominator) return {a.numerator + b.numerator, a.denominator};
  if (auto [q, r] = divmod(b.denominator, a.denominator); r.is_zero()) {
    return {a.numerator * q + b.numerator, b.denominator};
  }
  if (auto [q, r] = divmod(a.denominator, b.denominator); r.is_zero()) {
    return {a.numerator + b.numerator * q, a.denominator};
  }
  return {a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator};
}

std::string to_text(const Fraction& f) {
  auto [q, r] = divmod(f.numerator, f.denominator);
  if (r.is_zero()) return to_text(q);
  return "(" + to_text(f.numerator) + ") / (" + to_text(f.denominator) + ")";
}

std::string to_string(const Params& p) {
  std::string s = "n=" + std::to_string(p.n);
  if (p.k) s += ", k=" + std::to_string(*p.k);
  return s;
}

namespace {

void validate(const IdentityClaim& claim, const Params& params) {
  if (params.n < 0) throw std::invalid_argument(claim.id + ": n must be >= 0");
  if (claim.arity == 2) {
    if (!params.k) throw std::invalid_argument(claim.id + ": parameter k required");
    if (*params.k < 0) throw std::invalid_argument(claim.id + ": k must be >= 0");
  } else if (params.k) {
    throw std::invalid_argument(claim.id + ": takes no k parameter");
  }
}

std::int64_t degree_or_zero(const Polynomial& p) { return p.is_zero() ? 0 : p.degree(); }

}  // namespace

Decision decide_by_coefficients(const Fraction& lhs, const Fraction& rhs) {
  return lhs.numerator * rhs.denominator == rhs.numerator * lhs.denominator ? Decision::holds : Decision::fails;
}

Decision decide_by_evaluation(const Fraction& lhs, const Fraction& rhs) {
  const std::int64_t d = std::max(degree_or_zero(lhs.numerator) + degree_or_zero(rhs.denominator),
                                  degree_or_zero(rhs.numerator) + degree_or_zero(lhs.denominator));
  // Two polynomials of degree <= d agreeing at d+1 distinct points are equal.
  for (std::int64_t point = 1; point <= d + 1; ++point) {
    const BigRational x0(point);
    const BigRational left = eval_rational(lhs.numerator, x0) * eval_rational(rhs.denominator, x0);
    const BigRational right = eval_rational(rhs.numerator, x0) * eval_rational(lhs.denominator, x0);
    if (left != right) return Decision::fails;
  }
  return Decision::holds;
}

CheckResult check_claim(const IdentityClaim& claim, const Params& params) {
  validate(claim, params);
  const Fraction lhs = claim.lhs(params);
  const Fraction rhs = claim.rhs(params);
  if (decide_by_coefficients(lhs, rhs) == Decision::holds) return {Decision::holds, std::nullopt, std::nullopt};
  return {Decision::fails, to_text(lhs), to_text(rhs)};
}

Decision cross_oracle(const IdentityClaim& claim, const Params& params) {
  validate(claim, params);
  return decide_by_evaluation(claim.lhs(params), claim.rhs(params));
}

const IdentityClaim* find_claim(std::string_view id_or_label) {
  for (const auto& c : registry()) {
    if (c.id == id_or_label || c.label == id_or_label) return &c;
  }
  return nullptr;
}

}  // namespace qbid::audit
