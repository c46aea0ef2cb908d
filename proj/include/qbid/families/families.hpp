#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qbid/poly/polynomial.hpp"

namespace qbid {

// Every family is returned as an exact polynomial in X = [x]_q. The
// complement [1-x]_{1/q} equals 1 - X for 0 < q < 1, which is what lets the
// two-variable expressions collapse into a single polynomial ring.

/// q-Bernstein basis B_{k,n}(x|q) = C(n,k) X^k (1-X)^(n-k); zero for k<0 or k>n.
Polynomial bernstein(std::int64_t k, std::int64_t n);

/// B_{k,n}(1-x | 1/q) = C(n,k) (1-X)^k X^(n-k); zero for k<0 or k>n.
Polynomial bernstein_reflected(std::int64_t k, std::int64_t n);

/// q-Hermite polynomial from its finite closed-form sum.
Polynomial q_hermite_closed(std::int64_t n);

/// q-Hermite polynomial read off the generating function exp(2X t - t^2).
Polynomial q_hermite_gf(std::int64_t n);

/// Classical Hermite H_n, in the same formal slot X.
Polynomial hermite_classical(std::int64_t n);

enum class Family { bernstein, bernstein_reflected, q_hermite_closed, q_hermite_gf, hermite_classical };

/// A family name with validated parameters. `k` is only used by the
/// Bernstein families.
struct FamilyTag {
  Family family;
  std::int64_t n = 0;
  std::int64_t k = 0;

  /// Throws std::invalid_argument if n < 0, or if k < 0 for a Bernstein family.
  FamilyTag(Family f, std::int64_t n_, std::int64_t k_ = 0);
};

bool uses_k(Family f);
std::string_view family_name(Family f);
/// Accepts the canonical names plus "q-hermite" (closed form).
std::optional<Family> family_from_name(std::string_view name);

Polynomial build(const FamilyTag& tag);

}  // namespace qbid
