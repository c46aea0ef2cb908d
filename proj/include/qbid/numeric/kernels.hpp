#pragma once

#include <span>
#include <string_view>

namespace qbid::kernels {

/// Instruction sets the batch kernels are built for.
enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True if the kernel for `isa` was compiled in and the running CPU has it.
bool isa_available(Isa isa);

/// Widest available ISA, unless QBID_SIMD=scalar forces the reference path.
Isa active_isa();

/// out[i] = sum_{k=0}^{n} weights[k] * x[i]^k * y[i]^(n-k), n = weights.size() - 1.
///
/// Every variant performs the same floating-point operations in the same
/// order per point, so results are bit-identical across ISAs.
/// x, y and out must have equal length; weights must be nonempty.
void bernstein_sum(std::span<const double> weights, std::span<const double> x, std::span<const double> y,
                   std::span<double> out);

void bernstein_sum(Isa isa, std::span<const double> weights, std::span<const double> x,
                   std::span<const double> y, std::span<double> out);

namespace detail {
void bernstein_sum_scalar(std::span<const double> weights, std::span<const double> x, std::span<const double> y,
                          std::span<double> out);
#if defined(QBID_HAVE_AVX2)
void bernstein_sum_avx2(std::span<const double> weights, std::span<const double> x, std::span<const double> y,
                        std::span<double> out);
#endif
}  // namespace detail

}  // namespace qbid::kernels
