#include "qbid/numeric/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbid::kernels {

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(QBID_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa selected = [] {
    const char* forced = std::getenv("QBID_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return Isa::scalar;
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return selected;
}

namespace detail {

void bernstein_sum_scalar(std::span<const double> weights, std::span<const double> x, std::span<const double> y,
                          std::span<double> out) {
  const std::size_t n = weights.size() - 1;
  std::vector<double> ypow(n + 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    ypow[0] = 1.0;
    for (std::size_t j = 1; j <= n; ++j) ypow[j] = ypow[j - 1] * y[i];
    double acc = 0.0;
    double xpow = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      acc = acc + weights[k] * xpow * ypow[n - k];
      xpow = xpow * x[i];
    }
    out[i] = acc;
  }
}

}  // namespace detail

void bernstein_sum(Isa isa, std::span<const double> weights, std::span<const double> x, std::span<const double> y,
                   std::span<double> out) {
  if (weights.empty()) throw std::invalid_argument("bernstein_sum: empty weights");
  if (x.size() != y.size() || x.size() != out.size()) throw std::invalid_argument("bernstein_sum: length mismatch");
  if (!isa_available(isa)) throw std::invalid_argument("bernstein_sum: ISA not available: " + std::string(isa_name(isa)));
#if defined(QBID_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::bernstein_sum_avx2(weights, x, y, out);
#endif
  detail::bernstein_sum_scalar(weights, x, y, out);
}

void bernstein_sum(std::span<const double> weights, std::span<const double> x, std::span<const double> y,
                   std::span<double> out) {
  bernstein_sum(active_isa(), weights, x, y, out);
}

}  // namespace qbid::kernels
