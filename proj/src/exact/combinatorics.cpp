#include "qbid/exact/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace qbid {
namespace {

void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative argument " + std::to_string(n));
}

}  // namespace

BigInt factorial(std::int64_t n) {
  require_nonnegative(n, "factorial");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  require_nonnegative(n, "binomial");
  if (k < 0 || k > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

std::int64_t gauss_bracket(std::int64_t n) {
  require_nonnegative(n, "gauss_bracket");
  return n / 2;
}

}  // namespace qbid
