#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "generators.hpp"
#include "qbid/exact/combinatorics.hpp"

using qbid::BigInt;
using qbid::BigRational;

TEST_CASE("binomial examples") {
  CHECK(qbid::binomial(5, 2) == 10);
  CHECK(qbid::binomial(4, 0) == 1);
  CHECK(qbid::binomial(3, 5) == 0);
  CHECK(qbid::binomial(3, -1) == 0);
  CHECK_THROWS_AS(qbid::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("factorial examples") {
  CHECK(qbid::factorial(0) == 1);
  CHECK(qbid::factorial(5) == 120);
  CHECK(qbid::factorial(20) == qbid::oracle::factorial_by_multiplication(20));
  CHECK(qbid::factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(qbid::factorial(-3), std::invalid_argument);
}

TEST_CASE("gauss bracket") {
  CHECK(qbid::gauss_bracket(0) == 0);
  CHECK(qbid::gauss_bracket(5) == 2);
  CHECK(qbid::gauss_bracket(6) == 3);
}

TEST_CASE("binomial matches Pascal triangle and row sums") {
  const auto t = qbid::oracle::pascal(30);
  for (int n = 0; n <= 30; ++n) {
    BigInt row_sum = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(qbid::binomial(n, k) == t[n][k]);
      if (n > 0) CHECK(qbid::binomial(n, k) == qbid::binomial(n - 1, k - 1) + qbid::binomial(n - 1, k));
      row_sum += qbid::binomial(n, k);
    }
    BigInt two_n = 1;
    for (int i = 0; i < n; ++i) two_n *= 2;
    CHECK(row_sum == two_n);
  }
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 500; ++i) {
    const BigRational a = qbid::gen::rational(rng), b = qbid::gen::rational(rng), c = qbid::gen::rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    const BigRational q = a / (b.is_zero() ? BigRational(1) : b);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    CHECK(g == 1);
    CHECK(q.denominator() > 0);
  }
}

TEST_CASE("rational construction and parsing") {
  CHECK(BigRational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
  CHECK(BigRational::parse("-3/2") == BigRational(BigInt(-3), BigInt(2)));
  CHECK(BigRational::parse("10/5").to_string() == "2");
  CHECK(BigRational(INT64_MIN).to_string() == "-9223372036854775808");
  CHECK_THROWS_AS(BigRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
  CHECK(BigRational::from_double(0.375) == BigRational::parse("3/8"));
}
