#include "qbid/audit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace qbid::audit {
namespace {

std::string_view decision_name(Decision d) { return d == Decision::holds ? "holds" : "fails"; }

struct PointResult {
  Decision by_coefficients = Decision::holds;
  Decision by_evaluation = Decision::holds;
};

}  // namespace

OracleDisagreement::OracleDisagreement(const std::string& claim_id, const Params& params, const std::string& lhs,
                                       const std::string& rhs, Decision by_coefficients, Decision by_evaluation)
    : std::logic_error("oracle disagreement on " + claim_id + " at " + to_string(params) +
                       ": coefficient comparison says " + std::string(decision_name(by_coefficients)) +
                       ", multipoint evaluation says " + std::string(decision_name(by_evaluation)) +
                       "\n  lhs: " + lhs + "\n  rhs: " + rhs) {}

SweepDomain default_domain(const IdentityClaim& claim, std::int64_t n_max, std::int64_t k_max) {
  SweepDomain d{{0, n_max}, std::nullopt};
  if (claim.arity == 2) d.k = Range{0, k_max};
  return d;
}

std::vector<Params> enumerate(const SweepDomain& domain) {
  std::vector<Params> points;
  for (std::int64_t n = domain.n.lo; n <= domain.n.hi; ++n) {
    if (!domain.k) {
      points.push_back({n, std::nullopt});
      continue;
    }
    for (std::int64_t k = domain.k->lo; k <= domain.k->hi; ++k) points.push_back({n, k});
  }
  return points;
}

std::string_view status_name(Status s) {
  return s == Status::verified_on_range ? "verified-on-range" : "falsified";
}

std::optional<Status> status_from_name(std::string_view name) {
  if (name == "verified-on-range") return Status::verified_on_range;
  if (name == "falsified") return Status::falsified;
  return std::nullopt;
}

ReportEntry sweep(const IdentityClaim& claim, const SweepDomain& domain, std::size_t workers) {
  if (domain.k.has_value() != (claim.arity == 2)) {
    throw std::invalid_argument(claim.id + ": domain does not match claim arity");
  }
  if (domain.n.lo < 0 || (domain.k && domain.k->lo < 0)) throw std::invalid_argument(claim.id + ": negative range");
  const std::vector<Params> points = enumerate(domain);
  if (points.empty()) throw std::invalid_argument(claim.id + ": empty sweep domain");

  std::vector<PointResult> results(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        results[i] = {check_claim(claim, points[i]).decision, cross_oracle(claim, points[i])};
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(points.size());
        return;
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(workers, 1, points.size());
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  // Merge strictly in lexicographic order.
  ReportEntry entry{claim.id, claim.paper_ref, Status::verified_on_range, domain, std::nullopt};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PointResult& r = results[i];
    if (r.by_coefficients != r.by_evaluation) {
      const Fraction lhs = claim.lhs(points[i]);
      const Fraction rhs = claim.rhs(points[i]);
      throw OracleDisagreement(claim.id, points[i], to_text(lhs), to_text(rhs), r.by_coefficients, r.by_evaluation);
    }
    if (r.by_coefficients == Decision::fails && !entry.counterexample) {
      const CheckResult check = check_claim(claim, points[i]);
      entry.status = Status::falsified;
      entry.counterexample = Counterexample{points[i], check.lhs_text.value_or(""), check.rhs_text.value_or("")};
    }
  }
  return entry;
}

}  // namespace qbid::audit
