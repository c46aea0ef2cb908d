// qbid: expand, evaluate and audit q-Bernstein / q-Hermite families.
//
// Exit codes: 0 success, 1 --expect not met, 2 usage or input error,
// 3 I/O error, 4 internal consistency failure (oracle disagreement).

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "qbid/audit/report.hpp"
#include "qbid/families/families.hpp"
#include "qbid/numeric/bernstein_operator.hpp"
#include "qbid/numeric/family_eval.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kExpectationFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;
constexpr int kInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "p", "p/q" or a plain decimal "d.ddd" parse exactly; anything else is nullopt.
std::optional<qbid::BigRational> parse_exact(const std::string& text) {
  try {
    return qbid::BigRational::parse(text);
  } catch (const std::invalid_argument&) {
  }
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  qbid::BigInt den = 1;
  for (std::size_t i = dot + 1; i < body.size(); ++i) den *= 10;
  qbid::BigRational r(qbid::BigInt(digits, 10), den);
  return negative ? -r : r;
}

double parse_real(const std::string& text, const char* flag) {
  if (auto exact = parse_exact(text)) return exact->to_double();
  double v = 0.0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size()) {
    throw UsageError(std::string("invalid number for ") + flag + ": '" + text + "'");
  }
  return v;
}

std::size_t worker_count() {
  const char* env = std::getenv("QBID_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1U, std::thread::hardware_concurrency());
  const std::string_view s(env);
  std::size_t n = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc{} || p != s.data() + s.size() || n == 0) {
    throw UsageError("QBID_THREADS must be a positive integer, got '" + std::string(s) + "'");
  }
  return n;
}

qbid::FamilyTag make_tag(const std::string& family_name, std::optional<std::int64_t> n, std::optional<std::int64_t> k,
                         const std::string& via) {
  auto family = qbid::family_from_name(family_name);
  if (!family) {
    throw UsageError("unknown family '" + family_name +
                     "' (bernstein, bernstein-reflected, q-hermite, hermite-classical)");
  }
  if (via != "closed" && via != "gf") throw UsageError("--via must be 'closed' or 'gf'");
  if (*family == qbid::Family::q_hermite_closed && via == "gf") family = qbid::Family::q_hermite_gf;
  if (!n) throw UsageError("--n is required");
  if (qbid::uses_k(*family) && !k) throw UsageError("--k is required for " + family_name);
  try {
    return qbid::FamilyTag(*family, *n, k.value_or(0));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string render(const qbid::audit::AuditReport& report, const std::string& format) {
  if (format == "json") return qbid::audit::to_json(report);
  if (format == "markdown") return qbid::audit::to_markdown(report);
  if (format == "csv") return qbid::audit::to_csv(report);
  return qbid::audit::to_text(report);
}

struct Options {
  std::string family;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::string via = "closed";
  std::string x;
  std::string q;

  std::string claim;
  std::int64_t n_max = 12;
  std::int64_t k_max = 12;
  std::string expect;
  std::string format;
  std::string out;
  bool no_timestamp = false;

  std::string f;
  std::string samples;
  std::size_t grid = 11;
  bool classical = false;
};

int run_expand(const Options& o) {
  std::cout << qbid::to_text(qbid::build(make_tag(o.family, o.n, o.k, o.via))) << "\n";
  return kOk;
}

int run_eval(const Options& o) {
  const qbid::FamilyTag tag = make_tag(o.family, o.n, o.k, o.via);
  std::optional<qbid::BigRational> x_exact;
  try {
    x_exact = qbid::BigRational::parse(o.x);
  } catch (const std::invalid_argument&) {
  }
  const auto q_exact = parse_exact(o.q);
  const double x = parse_real(o.x, "--x");
  const double q = parse_real(o.q, "--q");
  std::optional<qbid::QPoint> point;
  try {
    point.emplace(x, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (x_exact && q_exact && x_exact->is_integer() && tag.family != qbid::Family::hermite_classical) {
    const auto xi = static_cast<std::uint64_t>(x_exact->to_double());
    const qbid::BigRational slot = qbid::q_number(xi, *q_exact);
    std::cout << qbid::eval_rational(qbid::build(tag), slot).to_string() << "\n";
    return kOk;
  }
  if (x_exact && !x_exact->is_integer()) {
    std::cerr << "note: x is not an integer; using the floating-point path\n";
  }
  std::cout << format_double(qbid::eval_family_float(tag, *point)) << "\n";
  return kOk;
}

int run_operator(const Options& o) {
  if (!o.n || *o.n < 0) throw UsageError("--n must be given and >= 0");
  if (o.grid == 0) throw UsageError("--grid must be >= 1");
  const auto n = static_cast<std::size_t>(*o.n);
  if (o.f.empty() == o.samples.empty()) throw UsageError("give exactly one of --f or --samples");

  std::optional<qbid::SampledFunction> f;
  if (!o.samples.empty()) {
    std::ifstream in(o.samples);
    if (!in) throw IoError("cannot read '" + o.samples + "'");
    try {
      f.emplace(qbid::read_samples_csv(in, n));
    } catch (const qbid::CsvError& e) {
      throw UsageError(o.samples + ": " + e.what());
    }
  } else {
    try {
      f.emplace(qbid::SampledFunction::builtin(o.f, n));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  const std::vector<double> xs = qbid::unit_grid(o.grid);
  std::vector<double> values;
  if (o.classical) {
    values = qbid::bernstein_operator_classical_grid(*f, xs);
  } else {
    if (o.q.empty()) throw UsageError("--q is required unless --classical");
    const double q = parse_real(o.q, "--q");
    if (!(q > 0.0 && q < 1.0)) throw UsageError("--q must lie in (0,1)");
    values = qbid::bernstein_operator_q_grid(*f, q, xs);
  }
  std::ostringstream out;
  out << "x,value\n";
  for (std::size_t i = 0; i < xs.size(); ++i) out << format_double(xs[i]) << ',' << format_double(values[i]) << '\n';
  write_output(out.str(), o.out);
  return kOk;
}

void check_format(const std::string& format) {
  if (format != "json" && format != "markdown" && format != "csv" && format != "text") {
    throw UsageError("--format must be json, markdown, csv or text");
  }
}

int run_verify(const Options& o) {
  const auto* claim = qbid::audit::find_claim(o.claim);
  if (claim == nullptr) {
    std::string ids;
    for (const auto& c : qbid::audit::registry()) ids += " " + c.id;
    throw UsageError("unknown claim '" + o.claim + "'; known claims:" + ids);
  }
  if (o.n_max < 0 || o.k_max < 0) throw UsageError("--n-max and --k-max must be >= 0");
  const std::string format = o.format.empty() ? "text" : o.format;
  check_format(format);
  std::optional<qbid::audit::Status> expected;
  if (!o.expect.empty()) {
    if (o.expect == "verified") expected = qbid::audit::Status::verified_on_range;
    else if (o.expect == "falsified") expected = qbid::audit::Status::falsified;
    else throw UsageError("--expect must be 'verified' or 'falsified'");
  }

  const auto entry = qbid::audit::sweep(*claim, qbid::audit::default_domain(*claim, o.n_max, o.k_max), worker_count());
  if (format == "json") {
    std::cout << qbid::audit::to_json(entry);
  } else {
    qbid::audit::AuditReport single{{o.n_max, o.k_max, std::string(qbid::audit::version()), ""}, {entry}};
    std::cout << render(single, format);
  }
  return expected && *expected != entry.status ? kExpectationFailed : kOk;
}

int run_report(const Options& o) {
  if (o.n_max < 0 || o.k_max < 0) throw UsageError("--n-max and --k-max must be >= 0");
  const std::string format = o.format.empty() ? "json" : o.format;
  check_format(format);
  const auto report = qbid::audit::run_audit(o.n_max, o.k_max, worker_count(),
                                             o.no_timestamp ? std::string() : qbid::audit::utc_timestamp_now());
  write_output(render(report, format), o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Bernstein / q-Hermite polynomial kernel and identity auditor"};
  app.require_subcommand(1);
  Options o;

  auto* expand = app.add_subcommand("expand", "Print a family member as a canonical polynomial in X = [x]_q");
  expand->add_option("--family", o.family, "bernstein | bernstein-reflected | q-hermite | hermite-classical")->required();
  expand->add_option("--n", o.n, "degree parameter n");
  expand->add_option("--k", o.k, "basis index k (Bernstein families)");
  expand->add_option("--via", o.via, "q-hermite construction: closed | gf");

  auto* eval = app.add_subcommand("eval", "Evaluate a family member at (x, q)");
  eval->add_option("--family", o.family)->required();
  eval->add_option("--n", o.n);
  eval->add_option("--k", o.k);
  eval->add_option("--via", o.via);
  eval->add_option("--x", o.x, "decimal or p/q; integer x takes the exact path")->required();
  eval->add_option("--q", o.q, "0 < q < 1, decimal or p/q")->required();

  auto* op = app.add_subcommand("operator", "Apply the Bernstein operator over an x-grid, printing x,value rows");
  op->add_option("--f", o.f, "built-in sample function: one | identity | square | exp");
  op->add_option("--samples", o.samples, "CSV file with header k,value and rows k = 0..n");
  op->add_option("--n", o.n, "operator order")->required();
  op->add_option("--q", o.q, "0 < q < 1");
  op->add_option("--grid", o.grid, "number of evenly spaced x in [0,1]");
  op->add_flag("--classical", o.classical, "use the classical operator instead of the q-operator");
  op->add_option("--out", o.out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Sweep one claim over its parameter range");
  verify->add_option("--claim", o.claim, "claim id (e.g. thm7) or label (e.g. I8)")->required();
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--k-max", o.k_max);
  verify->add_option("--expect", o.expect, "verified | falsified; exit 1 if the outcome differs");
  verify->add_option("--format", o.format, "text | json | markdown | csv");

  auto* report = app.add_subcommand("report", "Sweep every claim and write the audit report");
  report->add_option("--n-max", o.n_max);
  report->add_option("--k-max", o.k_max);
  report->add_option("--out", o.out, "output path (default stdout)");
  report->add_option("--format", o.format, "json | markdown | csv | text");
  report->add_flag("--no-timestamp", o.no_timestamp, "leave metadata.timestamp empty for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*expand) return run_expand(o);
    if (*eval) return run_eval(o);
    if (*op) return run_operator(o);
    if (*verify) return run_verify(o);
    if (*report) return run_report(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const qbid::audit::OracleDisagreement& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
