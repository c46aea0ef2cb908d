#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbid/audit/sweep.hpp"

namespace qbid::audit {

struct Metadata {
  std::int64_t n_max = 12;
  std::int64_t k_max = 12;
  std::string version;
  std::string timestamp;  // ISO-8601 UTC, empty when suppressed
  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct AuditReport {
  Metadata metadata;
  std::vector<ReportEntry> entries;
  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Library version string written into reports.
std::string_view version();

/// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp_now();

/// Sweeps every registry claim over n <= n_max, k <= k_max.
AuditReport run_audit(std::int64_t n_max, std::int64_t k_max, std::size_t workers, std::string timestamp);

/// Stable-key JSON, two-space indented, trailing newline.
std::string to_json(const AuditReport& report);
std::string to_json(const ReportEntry& entry);
/// Throws std::invalid_argument on schema violations.
AuditReport report_from_json(std::string_view text);

std::string to_markdown(const AuditReport& report);
std::string to_csv(const AuditReport& report);
std::string to_text(const AuditReport& report);
std::string to_text(const ReportEntry& entry);

}  // namespace qbid::audit
