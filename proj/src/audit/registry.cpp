#include "qbid/audit/claim.hpp"
#include "qbid/exact/combinatorics.hpp"
#include "qbid/families/families.hpp"

namespace qbid::audit {
namespace {

using std::int64_t;

// X = [x]_q and Y = [1-x]_{1/q} = 1 - X.
Polynomial x_pow(int64_t e) { return Polynomial::monomial(1, static_cast<std::size_t>(e)); }
Polynomial y_pow(int64_t e) { return pow(Polynomial{BigRational(1), BigRational(-1)}, static_cast<std::uint64_t>(e)); }
Polynomial scalar(const BigInt& c) { return Polynomial::constant(BigRational(c)); }
BigRational sign(int64_t e) { return BigRational(e % 2 == 0 ? 1 : -1); }

// H_{n,q} by its defining generating function.
Polynomial hermite(int64_t n) { return q_hermite_gf(n); }

int64_t k_of(const Params& p) { return p.k.value_or(0); }

Fraction cor2_rhs(const Params& p) {
  const int64_t n = p.n;
  Fraction sum{Polynomial{}};
  for (int64_t l = 0; l <= gauss_bracket(n); ++l) {
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * l));
    const BigRational c = sign(l) * BigRational(factorial(n) * two_pow, factorial(l) * factorial(n - 2 * l));
    sum = sum + Fraction(bernstein_reflected(2 * l, n) * c, y_pow(2 * l));
  }
  return sum;
}

Fraction thm3_lhs(const Params& p) {
  const int64_t n = p.n;
  Polynomial sum;
  for (int64_t l = 0; l <= n; ++l) {
    sum += derive(x_pow(n - l), static_cast<std::uint64_t>(l)) * (sign(l) * BigRational(binomial(n, l)));
  }
  return x_pow(k_of(p)) * sum;
}

Fraction thm4_rhs(const Params& p) {
  const int64_t n = p.n;
  Polynomial sum;
  for (int64_t l = 0; l <= n; ++l) {
    sum += hermite(l) * x_pow(n - l) * (sign(n - l) * BigRational(binomial(n, l)));
  }
  return sum;
}

Fraction cor5_rhs(const Params& p) {
  const int64_t n = p.n;
  Fraction sum{Polynomial{}};
  for (int64_t l = 0; l <= n; ++l) {
    const Polynomial num = hermite(l) * bernstein_reflected(l, n) * (sign(l) * BigRational(binomial(n, l)));
    sum = sum + Fraction(num, y_pow(l));
  }
  return sum;
}

std::vector<IdentityClaim> make_registry() {
  std::vector<IdentityClaim> r;

  r.push_back({"thm1", "I1", "Theorem 1: (-1)^l 2^{n-2l} [x]_q^{n-2l}", 1,
               [](const Params& p) { return Fraction(q_hermite_closed(p.n)); },
               [](const Params& p) { return Fraction(q_hermite_gf(p.n)); }});

  r.push_back({"cor2", "I2", "Corollary 2: B_{2l, n}(1-x \\mid \\frac{1}{q})", 1,
               [](const Params& p) { return Fraction(hermite(p.n)); }, cor2_rhs});

  r.push_back({"thm3", "I3", "Theorem 3: [x]_q^k \\sum_{l=0}^n \\binom nl (-1)^l", 2, thm3_lhs,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(bernstein(k, n + k), scalar(binomial(n + k, k)));
               }});

  r.push_back({"thm4", "I4", "Theorem 4: H_{n,q}(x)= \\sum_{l=0}^n \\binom nl H_{l,q}(x)", 1,
               [](const Params& p) { return Fraction(hermite(p.n)); }, thm4_rhs});

  r.push_back({"cor5", "I5", "Corollary 5: B_{l,n}(1-x \\mid \\frac{1}{q}) [1-x]_{\\frac{1}{q}}^{-l}", 1,
               [](const Params& p) { return Fraction(hermite(p.n)); }, cor5_rhs});

  r.push_back({"thm6", "I6", "Theorem 6: [x]_q^{n+k}( [1-x]_{\\frac{1}{q}}^n -(-1)^n", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(x_pow(n + k) * (y_pow(n) - y_pow(n) * sign(n)));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(x_pow(n) * bernstein(k, n + k) * (BigRational(1) - sign(n)),
                                 scalar(binomial(n + k, k)));
               }});

  r.push_back({"eq14", "I7", "Eq. (14): B_{n, 2n+k}(1-x \\mid \\frac{1}{q})-(-1)^n", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 const Polynomial b = bernstein_reflected(n, 2 * n + k);
                 return Fraction(b - b * sign(n));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 const Polynomial b = bernstein(n + k, 2 * n + k);
                 return Fraction(b - b * sign(n));
               }});

  r.push_back({"thm7", "I8", "Theorem 7: B_{n+k, 2n+k}(x \\mid q)", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(bernstein(n + k, 2 * n + k));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(x_pow(n) * bernstein(k, n + k), scalar(binomial(n + k, n)));
               }});

  r.push_back({"thm7-odd", "I9", "Theorem 7 corollary display: B_{n+1+k, 4n+2+k}(x \\mid q)", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(bernstein(n + 1 + k, 4 * n + 2 + k));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(bernstein(k, 2 * n + 1 + k) * x_pow(2 * n + 1),
                                 scalar(binomial(2 * n + 1 + k, 2 * n + 1)));
               }});

  r.push_back({"binom-odd", "I10",
               "Theorem 7 binomial identity: \\binom{2n+1+k}{2n+1}\\binom{4n+2+k}{2n+1+k}", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(scalar(binomial(2 * n + 1 + k, 2 * n + 1) * binomial(4 * n + 2 + k, 2 * n + 1 + k)));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(scalar(binomial(2 * n + 1 + k, k)));
               }});

  r.push_back({"eq16", "I11", "Display after (16): [x]_q^{n+k}[1-x]_{\\frac{1}{q}}^n = [x]_q^n", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(x_pow(n + k) * y_pow(n));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(x_pow(n) * bernstein(k, n + k), scalar(binomial(n + k, k)));
               }});

  r.push_back({"eq17", "I12", "Eq. (17): B_{2n+k, 4n+k}(x \\mid q)", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(bernstein(2 * n + k, 4 * n + k));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(bernstein(k, 2 * n + k) * x_pow(2 * n), scalar(binomial(2 * n + k, 2 * n)));
               }});

  r.push_back({"binom-even", "I13",
               "Final binomial identity: \\binom{4n+k}{2n+k}\\binom{2n+k}{2n}=\\binom{2n+k}{k}", 2,
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(scalar(binomial(4 * n + k, 2 * n + k) * binomial(2 * n + k, 2 * n)));
               },
               [](const Params& p) {
                 const int64_t n = p.n, k = k_of(p);
                 return Fraction(scalar(binomial(2 * n + k, k)));
               }});
  return r;
}

}  // namespace

const std::vector<IdentityClaim>& registry() {
  static const std::vector<IdentityClaim> claims = make_registry();
  return claims;
}

}  // namespace qbid::audit
