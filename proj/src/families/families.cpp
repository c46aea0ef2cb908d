#include "qbid/families/families.hpp"

#include <stdexcept>

#include "qbid/exact/combinatorics.hpp"
#include "qbid/series/truncated_series.hpp"

namespace qbid {
namespace {

const Polynomial& one_minus_x() {
  static const Polynomial p{BigRational(1), BigRational(-1)};
  return p;
}

void require_order(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative degree " + std::to_string(n));
}

// n! sum_{l=0}^{floor(n/2)} (-1)^l 2^(n-2l) X^(n-2l) / (l! (n-2l)!)
Polynomial q_hermite_sum(std::int64_t n) {
  const BigInt n_fact = factorial(n);
  std::vector<BigRational> coeffs(static_cast<std::size_t>(n) + 1);
  for (std::int64_t l = 0; l <= gauss_bracket(n); ++l) {
    const std::int64_t power = n - 2 * l;
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(power));
    BigRational c(n_fact * two_pow, factorial(l) * factorial(power));
    if (l % 2 == 1) c = -c;
    coeffs[static_cast<std::size_t>(power)] = c;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial bernstein(std::int64_t k, std::int64_t n) {
  require_order(n, "bernstein");
  if (k < 0 || k > n) return {};
  return Polynomial::monomial(BigRational(binomial(n, k)), static_cast<std::size_t>(k)) *
         pow(one_minus_x(), static_cast<std::uint64_t>(n - k));
}

Polynomial bernstein_reflected(std::int64_t k, std::int64_t n) {
  require_order(n, "bernstein_reflected");
  if (k < 0 || k > n) return {};
  return Polynomial::monomial(BigRational(binomial(n, k)), static_cast<std::size_t>(n - k)) *
         pow(one_minus_x(), static_cast<std::uint64_t>(k));
}

Polynomial q_hermite_closed(std::int64_t n) {
  require_order(n, "q_hermite_closed");
  return q_hermite_sum(n);
}

Polynomial q_hermite_gf(std::int64_t n) {
  require_order(n, "q_hermite_gf");
  return extract_hermite(static_cast<std::size_t>(n));
}

Polynomial hermite_classical(std::int64_t n) {
  require_order(n, "hermite_classical");
  // Integer form n!/(k!(n-2k)!) (-1)^k 2^(n-2k), kept separate from the
  // rational q-Hermite sum so the q -> 1 comparison is not self-referential.
  std::vector<BigRational> coeffs(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    BigInt c = factorial(n);
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), factorial(k).get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), factorial(n - 2 * k).get_mpz_t());
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 2 * k));
    if (k % 2 == 1) c = -c;
    coeffs[static_cast<std::size_t>(n - 2 * k)] = BigRational(c);
  }
  return Polynomial(std::move(coeffs));
}

FamilyTag::FamilyTag(Family f, std::int64_t n_, std::int64_t k_) : family(f), n(n_), k(k_) {
  if (n < 0) throw std::invalid_argument("family parameter n must be >= 0");
  if (uses_k(f) && k < 0) throw std::invalid_argument("family parameter k must be >= 0");
}

bool uses_k(Family f) { return f == Family::bernstein || f == Family::bernstein_reflected; }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::bernstein: return "bernstein";
    case Family::bernstein_reflected: return "bernstein-reflected";
    case Family::q_hermite_closed: return "q-hermite-closed";
    case Family::q_hermite_gf: return "q-hermite-gf";
    case Family::hermite_classical: return "hermite-classical";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "bernstein") return Family::bernstein;
  if (name == "bernstein-reflected") return Family::bernstein_reflected;
  if (name == "q-hermite" || name == "q-hermite-closed") return Family::q_hermite_closed;
  if (name == "q-hermite-gf") return Family::q_hermite_gf;
  if (name == "hermite-classical" || name == "hermite") return Family::hermite_classical;
  return std::nullopt;
}

Polynomial build(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::bernstein: return bernstein(tag.k, tag.n);
    case Family::bernstein_reflected: return bernstein_reflected(tag.k, tag.n);
    case Family::q_hermite_closed: return q_hermite_closed(tag.n);
    case Family::q_hermite_gf: return q_hermite_gf(tag.n);
    case Family::hermite_classical: return hermite_classical(tag.n);
  }
  throw std::logic_error("unknown family");
}

}  // namespace qbid
