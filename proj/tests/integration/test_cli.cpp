#include <cmath>
#include <fstream>
#include <sstream>

#include "run_command.hpp"
#include "doctest.h"
#include "qbid/audit/report.hpp"
#include "qbid/numeric/q_number.hpp"
#include "qbid/poly/polynomial.hpp"

using qbid::testing::cli;
using qbid::testing::run;

namespace {

std::string tmp_path(const std::string& name) { return std::string(QBID_TEST_TMP) + "/" + name; }

std::vector<std::pair<double, double>> parse_rows(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "x,value");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

}  // namespace

TEST_CASE("expand") {
  auto r = run(cli() + " expand --family q-hermite --n 3 --via closed");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "8*X^3 - 12*X\n");

  r = run(cli() + " expand --family bernstein --k 1 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(qbid::parse(r.out.substr(0, r.out.size() - 1)) == qbid::parse("2*X - 2*X^2"));

  r = run(cli() + " expand --family q-hermite --n 0 --via gf");
  CHECK(r.out == "1\n");
  CHECK(run(cli() + " expand --family q-hermite --n 12 --via gf").out ==
        run(cli() + " expand --family q-hermite --n 12 --via closed").out);

  CHECK(run(cli() + " expand --family bernstein --n 2").exit_code == 2);
  CHECK(run(cli() + " expand --family q-hermite --n -1").exit_code == 2);
  CHECK(run(cli() + " expand --family laguerre --n 2").exit_code == 2);
  CHECK(run(cli() + " expand --family q-hermite --n 2 --via series").exit_code == 2);
  CHECK(run(cli() + " expand --family q-hermite --n 2 --unknown").exit_code == 2);
  CHECK(run(cli()).exit_code == 2);
}

TEST_CASE("eval") {
  auto r = run(cli() + " eval --family bernstein --k 1 --n 2 --x 0.5 --q 0.5");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(0.485281374238570293).epsilon(1e-12));

  r = run(cli() + " eval --family q-hermite --n 2 --x 0 --q 1/3");
  CHECK(r.out == "-2\n");
  r = run(cli() + " eval --family q-hermite --n 2 --x 1 --q 1/3");
  CHECK(r.out == "2\n");

  CHECK(run(cli() + " eval --family bernstein --k 1 --n 2 --x 0.5 --q 1.5").exit_code == 2);
  CHECK(run(cli() + " eval --family bernstein --k 1 --n 2 --x 2 --q 0.5").exit_code == 2);
  CHECK(run(cli() + " eval --family bernstein --k 1 --n 2 --x abc --q 0.5").exit_code == 2);
}

TEST_CASE("operator") {
  auto r = run(cli() + " operator --f identity --n 8 --q 0.5 --grid 5");
  CHECK(r.exit_code == 0);
  const auto rows = parse_rows(r.out);
  REQUIRE(rows.size() == 5);
  for (const auto& [x, v] : rows) CHECK(std::abs(v - qbid::q_number(x, 0.5)) <= 1e-12);

  r = run(cli() + " operator --f one --n 4 --q 0.3 --grid 3");
  for (const auto& [x, v] : parse_rows(r.out)) CHECK(std::abs(v - 1.0) <= 1e-12);

  r = run(cli() + " operator --f identity --n 6 --classical --grid 4");
  for (const auto& [x, v] : parse_rows(r.out)) CHECK(std::abs(v - x) <= 1e-12);

  const std::string good = tmp_path("samples_good.csv");
  std::ofstream(good) << "k,value\n0,0\n1,0.5\n2,1\n";
  r = run(cli() + " operator --samples '" + good + "' --n 2 --q 0.5 --grid 3");
  CHECK(r.exit_code == 0);
  CHECK(parse_rows(r.out).size() == 3);

  const std::string bad = tmp_path("samples_bad.csv");
  std::ofstream(bad) << "k,value\n0,0\n1,oops\n2,1\n";
  CHECK(run(cli() + " operator --samples '" + bad + "' --n 2 --q 0.5").exit_code == 2);
  CHECK(run(cli() + " operator --samples '" + good + "' --n 3 --q 0.5").exit_code == 2);
  CHECK(run(cli() + " operator --samples /nonexistent/file.csv --n 2 --q 0.5").exit_code == 3);
  CHECK(run(cli() + " operator --f one --n 2").exit_code == 2);
  CHECK(run(cli() + " operator --f cube --n 2 --q 0.5").exit_code == 2);
  CHECK(run(cli() + " operator --f one --n 2 --q 0.5 --grid 0").exit_code == 2);

  const std::string out = tmp_path("operator_out.csv");
  CHECK(run(cli() + " operator --f square --n 3 --q 0.2 --grid 2 --out '" + out + "'").exit_code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,value");
}

TEST_CASE("verify") {
  CHECK(run(cli() + " verify --claim thm6 --n-max 10 --k-max 10 --expect verified").exit_code == 0);
  CHECK(run(cli() + " verify --claim thm6 --n-max 3 --k-max 3 --expect falsified").exit_code == 1);

  auto r = run(cli() + " verify --claim cor2 --n-max 12 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"status\": \"falsified\"") != std::string::npos);
  CHECK(r.out.find("\"lhs\": \"8*X^3 - 12*X\"") != std::string::npos);
  CHECK(r.out.find("\"rhs\": \"8*X^3 - 36*X\"") != std::string::npos);

  r = run(cli() + " verify --claim I8 --n-max 2 --k-max 2");
  CHECK(r.out.find("thm7: falsified") != std::string::npos);

  CHECK(run(cli() + " verify --claim nosuch").exit_code == 2);
  CHECK(run(cli() + " verify --claim thm6 --n-max -1").exit_code == 2);
  CHECK(run(cli() + " verify --claim thm6 --expect maybe").exit_code == 2);
  CHECK(run("QBID_THREADS=zero " + cli() + " verify --claim thm6").exit_code == 2);
}

TEST_CASE("report") {
  const std::string path = tmp_path("report.json");
  CHECK(run(cli() + " report --n-max 5 --k-max 5 --out '" + path + "'").exit_code == 0);
  std::ifstream in(path);
  const std::string json((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto report = qbid::audit::report_from_json(json);
  CHECK(report.entries.size() == 13);
  CHECK(report.metadata.n_max == 5);
  CHECK(report.metadata.timestamp.size() == 20);

  auto md = run(cli() + " report --n-max 3 --k-max 3 --format markdown --no-timestamp");
  CHECK(md.exit_code == 0);
  CHECK(std::count(md.out.begin(), md.out.end(), '\n') > 13);
  CHECK(md.out.find("| binom-even |") != std::string::npos);

  CHECK(run(cli() + " report --out /nonexistent/dir/report.json").exit_code == 3);
  CHECK(run(cli() + " report --format yaml").exit_code == 2);
}
