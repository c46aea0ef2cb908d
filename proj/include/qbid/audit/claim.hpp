#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbid/poly/polynomial.hpp"

namespace qbid::audit {

/// One side of a claimed identity, numerator / denominator.
///
/// Claims that divide by [1-x]_{1/q} powers or binomials keep the divisor
/// here; equality is decided on the cross-multiplied polynomials, which is
/// the polynomial closure of the identity on the open region.
struct Fraction {
  Polynomial numerator;
  Polynomial denominator = Polynomial::constant(1);

  Fraction() = default;
  Fraction(Polynomial num) : numerator(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error for a zero denominator.
  Fraction(Polynomial num, Polynomial den);
};

/// Sum of fractions; reuses a denominator when one divides the other.
Fraction operator+(const Fraction& a, const Fraction& b);

/// Canonical text of the side. When the denominator divides the numerator
/// the quotient is printed, otherwise "(num) / (den)".
std::string to_text(const Fraction& f);

struct Params {
  std::int64_t n = 0;
  std::optional<std::int64_t> k;

  friend bool operator==(const Params&, const Params&) = default;
};

std::string to_string(const Params& p);

struct IdentityClaim {
  std::string id;
  std::string label;  // I1 .. I13
  std::string paper_ref;
  int arity = 1;  // 1: n only, 2: (n, k)
  std::function<Fraction(const Params&)> lhs;
  std::function<Fraction(const Params&)> rhs;
};

/// All audited claims in a fixed order; ids are stable.
const std::vector<IdentityClaim>& registry();

/// Looks up by id ("thm7") or label ("I8"); nullptr if absent.
const IdentityClaim* find_claim(std::string_view id_or_label);

enum class Decision { holds, fails };

struct CheckResult {
  Decision decision;
  /// Canonical text of both sides, present only when the claim fails.
  std::optional<std::string> lhs_text;
  std::optional<std::string> rhs_text;
};

/// Decides the claim at `params` by comparing coefficients of the
/// cross-multiplied sides. Throws std::invalid_argument if the parameters
/// do not match the claim's arity or are negative.
CheckResult check_claim(const IdentityClaim& claim, const Params& params);

/// Decides the same equation by exact evaluation of both cross-multiplied
/// sides at X = 1 .. D+1, D the larger degree. Shares no code with
/// check_claim beyond the builders.
Decision cross_oracle(const IdentityClaim& claim, const Params& params);

// Deciders on prebuilt sides, used by the sweep to build each point once.
Decision decide_by_coefficients(const Fraction& lhs, const Fraction& rhs);
Decision decide_by_evaluation(const Fraction& lhs, const Fraction& rhs);

}  // namespace qbid::audit
