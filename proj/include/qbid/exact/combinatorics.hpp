#pragma once

#include <cstdint>

#include "qbid/exact/big_rational.hpp"

namespace qbid {

/// n! exactly. Throws std::invalid_argument for n < 0.
BigInt factorial(std::int64_t n);

/// C(n, k) = n! / (k! (n-k)!) for 0 <= k <= n and 0 otherwise, so basis
/// constructors stay total over rectangular parameter grids.
/// Throws std::invalid_argument for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// floor(n / 2). Throws std::invalid_argument for n < 0.
std::int64_t gauss_bracket(std::int64_t n);

}  // namespace qbid
