#include "qbid/numeric/bernstein_operator.hpp"

#include <charconv>
#include <cmath>

#include "qbid/exact/combinatorics.hpp"
#include "qbid/numeric/kernels.hpp"

namespace qbid {
namespace {

std::vector<double> operator_weights(const SampledFunction& f) {
  const auto n = static_cast<std::int64_t>(f.n());
  std::vector<double> w(f.n() + 1);
  for (std::int64_t k = 0; k <= n; ++k) w[static_cast<std::size_t>(k)] = f.values()[static_cast<std::size_t>(k)] * binomial(n, k).get_d();
  return w;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

SampledFunction::SampledFunction(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ + 1) {
    throw std::invalid_argument("expected " + std::to_string(n_ + 1) + " samples, got " + std::to_string(values_.size()));
  }
}

SampledFunction SampledFunction::builtin(std::string_view name, std::size_t n) {
  if (name == "one") return sample(n, [](double) { return 1.0; });
  if (name == "identity") return sample(n, [](double t) { return t; });
  if (name == "square") return sample(n, [](double t) { return t * t; });
  if (name == "exp") return sample(n, [](double t) { return std::exp(t); });
  throw std::invalid_argument("unknown built-in function '" + std::string(name) + "' (one, identity, square, exp)");
}

SampledFunction read_samples_csv(std::istream& in, std::size_t n) {
  std::string line;
  std::size_t row = 1;
  if (!std::getline(in, line)) throw CsvError(row, "missing header 'k,value'");
  if (trim(line) != "k,value") throw CsvError(row, "expected header 'k,value'");

  std::vector<double> values;
  while (std::getline(in, line)) {
    ++row;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw CsvError(row, "expected 'k,value'");
    const std::string_view k_text = trim(body.substr(0, comma));
    const std::string_view v_text = trim(body.substr(comma + 1));

    std::size_t k = 0;
    auto [kp, kec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
    if (kec != std::errc{} || kp != k_text.data() + k_text.size()) throw CsvError(row, "malformed index '" + std::string(k_text) + "'");
    if (k != values.size()) throw CsvError(row, "expected index " + std::to_string(values.size()) + ", got " + std::to_string(k));

    double v = 0.0;
    auto [vp, vec] = std::from_chars(v_text.data(), v_text.data() + v_text.size(), v);
    if (vec != std::errc{} || vp != v_text.data() + v_text.size() || !std::isfinite(v)) {
      throw CsvError(row, "malformed value '" + std::string(v_text) + "'");
    }
    values.push_back(v);
  }
  if (values.size() != n + 1) {
    throw CsvError(row, "expected " + std::to_string(n + 1) + " sample rows, found " + std::to_string(values.size()));
  }
  return SampledFunction(n, std::move(values));
}

double bernstein_operator_q(const SampledFunction& f, const QPoint& p) {
  const double xs[] = {q_number(p.x(), p.q())};
  const double ys[] = {complement_q_number(p.x(), p.q())};
  double out[1];
  const auto w = operator_weights(f);
  kernels::bernstein_sum(kernels::Isa::scalar, w, xs, ys, out);
  return out[0];
}

double bernstein_operator_classical(const SampledFunction& f, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x must lie in [0,1]");
  const double xs[] = {x};
  const double ys[] = {1.0 - x};
  double out[1];
  const auto w = operator_weights(f);
  kernels::bernstein_sum(kernels::Isa::scalar, w, xs, ys, out);
  return out[0];
}

std::vector<double> bernstein_operator_q_grid(const SampledFunction& f, double q, std::span<const double> xs) {
  std::vector<double> qx(xs.size());
  std::vector<double> qy(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const QPoint p(xs[i], q);
    qx[i] = q_number(p.x(), p.q());
    qy[i] = complement_q_number(p.x(), p.q());
  }
  std::vector<double> out(xs.size());
  kernels::bernstein_sum(operator_weights(f), qx, qy, out);
  return out;
}

std::vector<double> bernstein_operator_classical_grid(const SampledFunction& f, std::span<const double> xs) {
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] >= 0.0 && xs[i] <= 1.0)) throw std::invalid_argument("x must lie in [0,1]");
    ys[i] = 1.0 - xs[i];
  }
  std::vector<double> out(xs.size());
  kernels::bernstein_sum(operator_weights(f), xs, ys, out);
  return out;
}

BigRational bernstein_operator_q_exact(std::span<const BigRational> samples, std::uint64_t x, const BigRational& q) {
  if (samples.empty()) throw std::invalid_argument("bernstein_operator_q_exact: no samples");
  const auto n = static_cast<std::int64_t>(samples.size()) - 1;
  const BigRational qx = q_number(x, q);
  const BigRational qy = complement_q_number(x, q);
  BigRational sum;
  for (std::int64_t k = 0; k <= n; ++k) {
    BigRational term = samples[static_cast<std::size_t>(k)] * BigRational(binomial(n, k));
    for (std::int64_t i = 0; i < k; ++i) term *= qx;
    for (std::int64_t i = 0; i < n - k; ++i) term *= qy;
    sum += term;
  }
  return sum;
}

std::vector<double> unit_grid(std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) xs[i] = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
  return xs;
}

}  // namespace qbid
