#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbid/exact/big_rational.hpp"
#include "qbid/numeric/q_number.hpp"

namespace qbid {

/// Samples f(k/n) for k = 0..n.
class SampledFunction {
 public:
  /// Throws std::invalid_argument unless values.size() == n + 1.
  SampledFunction(std::size_t n, std::vector<double> values);

  /// Samples a callable at k/n.
  template <typename F>
  static SampledFunction sample(std::size_t n, F&& f) {
    std::vector<double> values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) values[k] = f(n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n));
    return SampledFunction(n, std::move(values));
  }

  /// Built-in generators: "one", "identity", "square", "exp".
  /// Throws std::invalid_argument for other names.
  static SampledFunction builtin(std::string_view name, std::size_t n);

  std::size_t n() const { return n_; }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Malformed sample CSV; `row()` is the 1-based line number in the input.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t row, const std::string& message)
      : std::runtime_error("row " + std::to_string(row) + ": " + message), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Reads a header line "k,value" followed by rows k = 0..n in order.
SampledFunction read_samples_csv(std::istream& in, std::size_t n);

/// sum_k f(k/n) C(n,k) [x]_q^k [1-x]_{1/q}^(n-k), in double precision.
double bernstein_operator_q(const SampledFunction& f, const QPoint& p);

/// sum_k f(k/n) C(n,k) x^k (1-x)^(n-k). Throws unless 0 <= x <= 1.
double bernstein_operator_classical(const SampledFunction& f, double x);

/// The q-operator over many x at once (same q), through the batch kernel.
std::vector<double> bernstein_operator_q_grid(const SampledFunction& f, double q, std::span<const double> xs);

/// The classical operator over many x at once.
std::vector<double> bernstein_operator_classical_grid(const SampledFunction& f, std::span<const double> xs);

/// Exact q-operator for integer x in {0,1} and rational q, with rational samples.
BigRational bernstein_operator_q_exact(std::span<const BigRational> samples, std::uint64_t x, const BigRational& q);

/// n+1 evenly spaced points 0, 1/(count-1), ..., 1. count == 1 gives {0}.
std::vector<double> unit_grid(std::size_t count);

}  // namespace qbid
