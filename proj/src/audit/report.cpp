#include "qbid/audit/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "json.hpp"

#ifndef QBID_VERSION
#define QBID_VERSION "0.0.0"
#endif

namespace qbid::audit {
namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kSemantics =
    "Each parameter point is decided exactly as a polynomial identity in X = [x]_q (with [1-x]_{1/q} = 1 - X); "
    "sides with divisors are compared cross-multiplied. verified-on-range means every point of the listed "
    "range holds, not that the claim holds for all parameters.";

json range_json(const Range& r) { return json::array({r.lo, r.hi}); }

json entry_json(const ReportEntry& e) {
  json j;
  j["id"] = e.id;
  j["paper_ref"] = e.paper_ref;
  j["status"] = std::string(status_name(e.status));
  j["domain"] = {{"n", range_json(e.domain.n)}, {"k", e.domain.k ? range_json(*e.domain.k) : json(nullptr)}};
  if (e.counterexample) {
    const auto& c = *e.counterexample;
    json params;
    params["n"] = c.params.n;
    params["k"] = c.params.k ? json(*c.params.k) : json(nullptr);
    j["counterexample"] = {{"params", params}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Range range_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("range must be [lo, hi]");
  return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

ReportEntry entry_from(const json& j) {
  ReportEntry e;
  e.id = j.at("id").get<std::string>();
  e.paper_ref = j.at("paper_ref").get<std::string>();
  const auto status = status_from_name(j.at("status").get<std::string>());
  if (!status) throw std::invalid_argument("unknown status in entry " + e.id);
  e.status = *status;
  e.domain.n = range_from(j.at("domain").at("n"));
  if (const auto& k = j.at("domain").at("k"); !k.is_null()) e.domain.k = range_from(k);
  if (const auto& c = j.at("counterexample"); !c.is_null()) {
    Counterexample ce;
    ce.params.n = c.at("params").at("n").get<std::int64_t>();
    if (const auto& k = c.at("params").at("k"); !k.is_null()) ce.params.k = k.get<std::int64_t>();
    ce.lhs = c.at("lhs").get<std::string>();
    ce.rhs = c.at("rhs").get<std::string>();
    e.counterexample = ce;
  }
  if (e.counterexample.has_value() != (e.status == Status::falsified)) {
    throw std::invalid_argument("counterexample must be present iff falsified (" + e.id + ")");
  }
  return e;
}

std::string domain_text(const SweepDomain& d) {
  std::string s = "n in [" + std::to_string(d.n.lo) + ", " + std::to_string(d.n.hi) + "]";
  if (d.k) s += ", k in [" + std::to_string(d.k->lo) + ", " + std::to_string(d.k->hi) + "]";
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string_view version() { return QBID_VERSION; }

std::string utc_timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AuditReport run_audit(std::int64_t n_max, std::int64_t k_max, std::size_t workers, std::string timestamp) {
  if (n_max < 0 || k_max < 0) throw std::invalid_argument("n_max and k_max must be >= 0");
  AuditReport report{{n_max, k_max, std::string(version()), std::move(timestamp)}, {}};
  for (const auto& claim : registry()) {
    report.entries.push_back(sweep(claim, default_domain(claim, n_max, k_max), workers));
  }
  return report;
}

std::string to_json(const AuditReport& report) {
  json j;
  j["metadata"] = {{"n_max", report.metadata.n_max},
                   {"k_max", report.metadata.k_max},
                   {"version", report.metadata.version},
                   {"timestamp", report.metadata.timestamp},
                   {"semantics", kSemantics}};
  j["claims"] = json::array();
  for (const auto& e : report.entries) j["claims"].push_back(entry_json(e));
  return j.dump(2) + "\n";
}

std::string to_json(const ReportEntry& entry) { return entry_json(entry).dump(2) + "\n"; }

AuditReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    AuditReport r;
    const auto& m = j.at("metadata");
    r.metadata.n_max = m.at("n_max").get<std::int64_t>();
    r.metadata.k_max = m.at("k_max").get<std::int64_t>();
    r.metadata.version = m.at("version").get<std::string>();
    r.metadata.timestamp = m.at("timestamp").get<std::string>();
    for (const auto& c : j.at("claims")) r.entries.push_back(entry_from(c));
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
}

std::string to_markdown(const AuditReport& report) {
  std::ostringstream out;
  out << "# Identity audit\n\n"
      << "- version: " << report.metadata.version << "\n"
      << "- sweep: n <= " << report.metadata.n_max << ", k <= " << report.metadata.k_max << "\n";
  if (!report.metadata.timestamp.empty()) out << "- generated: " << report.metadata.timestamp << "\n";
  out << "\n" << kSemantics << "\n\n"
      << "| id | reference | status | domain | counterexample | lhs | rhs |\n"
      << "|---|---|---|---|---|---|---|\n";
  for (const auto& e : report.entries) {
    out << "| " << e.id << " | " << md_escape(e.paper_ref) << " | " << status_name(e.status) << " | "
        << domain_text(e.domain) << " | ";
    if (e.counterexample) {
      out << to_string(e.counterexample->params) << " | `" << e.counterexample->lhs << "` | `"
          << e.counterexample->rhs << "` |\n";
    } else {
      out << " |  |  |\n";
    }
  }
  return out.str();
}

std::string to_csv(const AuditReport& report) {
  std::ostringstream out;
  out << "id,status,n_lo,n_hi,k_lo,k_hi,cx_n,cx_k,lhs,rhs\n";
  for (const auto& e : report.entries) {
    out << e.id << ',' << status_name(e.status) << ',' << e.domain.n.lo << ',' << e.domain.n.hi << ',';
    if (e.domain.k) out << e.domain.k->lo << ',' << e.domain.k->hi;
    else out << ',';
    out << ',';
    if (e.counterexample) {
      const auto& c = *e.counterexample;
      out << c.params.n << ',';
      if (c.params.k) out << *c.params.k;
      out << ',' << csv_quote(c.lhs) << ',' << csv_quote(c.rhs);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const ReportEntry& entry) {
  std::string s = entry.id + ": " + std::string(status_name(entry.status)) + " (" + domain_text(entry.domain) + ")";
  if (entry.counterexample) {
    const auto& c = *entry.counterexample;
    s += "\n  first failure at " + to_string(c.params) + "\n  lhs: " + c.lhs + "\n  rhs: " + c.rhs;
  }
  return s + "\n";
}

std::string to_text(const AuditReport& report) {
  std::string s;
  for (const auto& e : report.entries) s += to_text(e);
  return s;
}

}  // namespace qbid::audit
