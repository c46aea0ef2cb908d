#include "doctest.h"
#include "oracles.hpp"
#include "qbid/families/families.hpp"
#include "qbid/series/truncated_series.hpp"

using qbid::Polynomial;
using qbid::TruncatedSeries;

namespace {
Polynomial P(std::string_view s) { return qbid::parse(s); }
}  // namespace

TEST_CASE("series_from_argument") {
  const auto s0 = qbid::series_from_argument(0);
  CHECK(s0.order() == 0);
  CHECK(s0.coefficient(0).is_zero());
  CHECK(qbid::series_from_argument(2) == TruncatedSeries(2, {Polynomial{}, P("2*X"), P("-1")}));
  const auto s5 = qbid::series_from_argument(5);
  CHECK(s5 == TruncatedSeries(5, {Polynomial{}, P("2*X"), P("-1"), P("0"), P("0"), P("0")}));
}

TEST_CASE("series_mul") {
  const TruncatedSeries a(4, {P("1"), P("X"), P("3"), P("0"), P("X^2")});
  CHECK(qbid::series_mul(a, TruncatedSeries::unit(4)) == a);
  const TruncatedSeries t(2, {Polynomial{}, P("1")});
  CHECK(qbid::series_mul(t, t) == TruncatedSeries(2, {Polynomial{}, Polynomial{}, P("1")}));

  // exp(2Xt) * exp(-t^2) written out to order 2: t^2 coefficient is 2X^2 - 1.
  const TruncatedSeries left(2, {P("1"), P("2*X"), P("2*X^2")});
  const TruncatedSeries right(2, {P("1"), P("0"), P("-1")});
  CHECK(qbid::series_mul(left, right).coefficient(2) == P("2*X^2 - 1"));

  CHECK_THROWS_AS(qbid::series_mul(TruncatedSeries(2), TruncatedSeries(3)), std::invalid_argument);
}

TEST_CASE("series_exp") {
  CHECK(qbid::series_exp(TruncatedSeries(6)) == TruncatedSeries::unit(6));
  CHECK(qbid::series_exp(qbid::series_from_argument(1)) == TruncatedSeries(1, {P("1"), P("2*X")}));
  CHECK(qbid::series_exp(qbid::series_from_argument(2)).coefficient(2) == P("2*X^2 - 1"));
  CHECK_THROWS_AS(qbid::series_exp(TruncatedSeries::unit(3)), std::invalid_argument);
}

TEST_CASE("exp(a) * exp(-a) is the unit series") {
  const TruncatedSeries a(7, {Polynomial{}, P("1/3*X - 2"), P("X^2"), P("-5/2"), Polynomial{}, P("X^3 + X"), P("7"), P("1")});
  CHECK(qbid::series_mul(qbid::series_exp(a), qbid::series_exp(-a)) == TruncatedSeries::unit(7));
  const auto g = qbid::series_from_argument(9);
  CHECK(qbid::series_mul(qbid::series_exp(g), qbid::series_exp(-g)) == TruncatedSeries::unit(9));
}

TEST_CASE("truncation monotonicity") {
  const auto low = qbid::series_exp(qbid::series_from_argument(6));
  const auto high = qbid::series_exp(qbid::series_from_argument(11));
  for (std::size_t i = 0; i <= 6; ++i) CHECK(low.coefficient(i) == high.coefficient(i));
}

TEST_CASE("extract_hermite") {
  CHECK(qbid::extract_hermite(0) == P("1"));
  CHECK(qbid::extract_hermite(2) == P("4*X^2 - 2"));
  CHECK(qbid::extract_hermite(3) == P("8*X^3 - 12*X"));
  for (int n = 0; n <= 30; ++n) {
    CHECK(qbid::extract_hermite(static_cast<std::size_t>(n)) == qbid::oracle::from_map(qbid::oracle::hermite_by_product(n)));
    CHECK(qbid::extract_hermite(static_cast<std::size_t>(n)) == qbid::q_hermite_closed(n));
  }
}
