#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbid/audit/claim.hpp"

namespace qbid::audit {

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

/// Rectangular parameter range; `k` is absent for one-parameter claims.
struct SweepDomain {
  Range n;
  std::optional<Range> k;
  friend bool operator==(const SweepDomain&, const SweepDomain&) = default;
};

/// The claim's domain restricted to n <= n_max (and k <= k_max if it has k).
SweepDomain default_domain(const IdentityClaim& claim, std::int64_t n_max, std::int64_t k_max);

/// All parameter points of the domain in lexicographic (n, k) order.
std::vector<Params> enumerate(const SweepDomain& domain);

enum class Status { verified_on_range, falsified };

std::string_view status_name(Status s);
std::optional<Status> status_from_name(std::string_view name);

struct Counterexample {
  Params params;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ReportEntry {
  std::string id;
  std::string paper_ref;
  Status status = Status::verified_on_range;
  SweepDomain domain;
  std::optional<Counterexample> counterexample;
  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

/// The two deciders returned different answers; carries both transcripts.
class OracleDisagreement : public std::logic_error {
 public:
  OracleDisagreement(const std::string& claim_id, const Params& params, const std::string& lhs,
                     const std::string& rhs, Decision by_coefficients, Decision by_evaluation);
};

/// Decides the claim at every point of `domain` with both deciders, using
/// up to `workers` threads. The first failing point in lexicographic order
/// is the counterexample, independent of scheduling. Throws
/// OracleDisagreement if the deciders ever differ, std::invalid_argument for
/// an empty domain or a domain that does not match the claim's arity.
ReportEntry sweep(const IdentityClaim& claim, const SweepDomain& domain, std::size_t workers = 1);

}  // namespace qbid::audit
