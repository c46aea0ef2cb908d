#include <immintrin.h>

#include <vector>

#include "qbid/numeric/kernels.hpp"

namespace qbid::kernels::detail {

// Four points per lane group; the per-point arithmetic mirrors
// bernstein_sum_scalar exactly (no FMA).
void bernstein_sum_avx2(std::span<const double> weights, std::span<const double> x, std::span<const double> y,
                        std::span<double> out) {
  const std::size_t n = weights.size() - 1;
  const std::size_t count = x.size();
  const std::size_t full = count - count % 4;
  // ypow[4j .. 4j+3] holds y^j for the current group of four points.
  std::vector<double> ypow(4 * (n + 1));
  const __m256d one = _mm256_set1_pd(1.0);

  for (std::size_t i = 0; i < full; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    const __m256d yv = _mm256_loadu_pd(y.data() + i);
    __m256d yp = one;
    _mm256_storeu_pd(ypow.data(), yp);
    for (std::size_t j = 1; j <= n; ++j) {
      yp = _mm256_mul_pd(yp, yv);
      _mm256_storeu_pd(ypow.data() + 4 * j, yp);
    }
    __m256d acc = _mm256_setzero_pd();
    __m256d xpow = one;
    for (std::size_t k = 0; k <= n; ++k) {
      const __m256d w = _mm256_set1_pd(weights[k]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(w, xpow), _mm256_loadu_pd(ypow.data() + 4 * (n - k))));
      xpow = _mm256_mul_pd(xpow, xv);
    }
    _mm256_storeu_pd(out.data() + i, acc);
  }
  if (full < count) {
    bernstein_sum_scalar(weights, x.subspan(full), y.subspan(full), out.subspan(full));
  }
}

}  // namespace qbid::kernels::detail
