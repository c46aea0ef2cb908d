#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qbid/numeric/kernels.hpp"

using qbid::kernels::Isa;

namespace {

struct Case {
  std::vector<double> weights, x, y;
};

Case random_case(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::uniform_real_distribution<double> u(0.0, 1.0), w(-3.0, 3.0);
  Case c;
  c.weights.resize(n + 1);
  for (auto& v : c.weights) v = w(rng);
  c.x.resize(count);
  c.y.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    c.x[i] = u(rng);
    c.y[i] = u(rng);
  }
  return c;
}

}  // namespace

TEST_CASE("scalar kernel matches the direct sum") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {0u, 1u, 4u, 16u}) {
    const Case c = random_case(rng, n, 9);
    std::vector<double> out(c.x.size());
    qbid::kernels::bernstein_sum(Isa::scalar, c.weights, c.x, c.y, out);
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      double direct = 0.0, scale = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        const double term = c.weights[k] * std::pow(c.x[i], double(k)) * std::pow(c.y[i], double(n - k));
        direct += term;
        scale += std::abs(term);
      }
      CHECK(std::abs(out[i] - direct) <= 1e-13 * std::max(scale, 1.0));
    }
  }
}

TEST_CASE("SIMD kernels are bit-identical to the scalar reference") {
  if (!qbid::kernels::isa_available(Isa::avx2)) {
    MESSAGE("AVX2 not available; only the scalar kernel is exercised");
    return;
  }
  std::mt19937_64 rng(17);
  for (std::size_t n : {0u, 1u, 2u, 7u, 16u, 40u}) {
    for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 8u, 33u, 101u}) {
      const Case c = random_case(rng, n, count);
      std::vector<double> scalar(count), simd(count);
      qbid::kernels::bernstein_sum(Isa::scalar, c.weights, c.x, c.y, scalar);
      qbid::kernels::bernstein_sum(Isa::avx2, c.weights, c.x, c.y, simd);
      CHECK(std::memcmp(scalar.data(), simd.data(), count * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("kernel argument checks") {
  std::vector<double> w{1.0}, x{0.5, 0.5}, y{0.5}, out(2);
  CHECK_THROWS_AS(qbid::kernels::bernstein_sum(Isa::scalar, w, x, y, out), std::invalid_argument);
  CHECK_THROWS_AS(qbid::kernels::bernstein_sum(Isa::scalar, std::span<const double>{}, x, x, out),
                  std::invalid_argument);
  CHECK(qbid::kernels::isa_available(Isa::scalar));
  CHECK(qbid::kernels::isa_available(qbid::kernels::active_isa()));
}
