#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "nlgreen/potentials.hpp"
#include "output.hpp"

using namespace nlgreen;
using namespace nlgreen::cli;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

void check_rectangular(const std::vector<std::vector<std::string>>& rows) {
  REQUIRE(!rows.empty());
  for (const auto& r : rows) CHECK(r.size() == rows.front().size());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("grid parsing") {
  const GridSpec g = parse_grid("-10:10:401");
  CHECK(g.lo == -10.0);
  CHECK(g.hi == 10.0);
  CHECK(g.n == 401);
  CHECK_THROWS(parse_grid("1:0:5"));
  CHECK_THROWS(parse_grid("0:1:1"));
  CHECK_THROWS(parse_grid("0:1:2.5"));
  CHECK_THROWS(parse_grid("0:1"));
  CHECK_THROWS(parse_grid("a:1:3"));
  CHECK(parse_segment("-1:1").lo == -1.0);
  CHECK_THROWS(parse_segment("1:1"));
  CHECK(parse_list("0.5,1,2").size() == 3);
}

TEST_CASE("format_number keeps 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(0.0) == "0");
  CHECK(std::stod(format_number(M_PI)) == M_PI);
}

TEST_CASE("eval tanh-point") {
  const auto r = call({"eval", "tanh-point", "--mu", "1", "--lambda", "1", "--grid", "-10:10:401"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_rectangular(rows);
  CHECK(rows.size() == 402);
  CHECK(rows[0] == std::vector<std::string>{"x", "value"});
  CHECK(std::abs(std::stod(rows[201][0])) <= 1e-14);
  CHECK(std::abs(std::stod(rows[201][1])) <= 1e-14);
}

TEST_CASE("eval tan-point is increasing on the first branch") {
  const auto r = call({"eval", "tan-point", "--m", "1", "--lambda", "1", "--grid", "0:2:101"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_rectangular(rows);
  REQUIRE(rows.size() == 102);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) > std::stod(rows[i - 1][1]));
  }
}

TEST_CASE("eval marks pole hits as empty fields") {
  const double pole = std::sqrt(2.0) * M_PI / 2.0;
  const std::string grid = "0:" + format_number(2 * pole) + ":3";
  const auto r = call({"eval", "tan-point", "--grid", grid});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_rectangular(rows);
  CHECK(rows[2][1].empty());
  CHECK(!rows[1][1].empty());
}

TEST_CASE("bad arguments exit 2") {
  CHECK(call({"eval", "tanh-point", "--lambda", "-1"}).code == kBadArguments);
  CHECK(call({"eval", "tanh-point", "--grid", "5:1:10"}).code == kBadArguments);
  CHECK(call({"eval", "no-such-kind"}).code == kBadArguments);
  CHECK(call({"eval"}).code == kBadArguments);
  CHECK(call({}).code == kBadArguments);
  CHECK(call({"potential", "--dist", "step"}).code == kBadArguments);
  CHECK(call({"potential", "--dist", "nope"}).code == kBadArguments);
  CHECK(call({"eval", "step-tanh", "--a", "2", "--b", "1"}).code == kBadArguments);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("potential step/tanh matches the closed form") {
  const auto r = call({"potential", "--dist", "step", "--a", "-4", "--b", "8", "--kernel", "tanh",
                       "--grid", "-20:20:81"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_rectangular(rows);
  CHECK(rows[0] == std::vector<std::string>{"x", "value", "error_estimate"});
  REQUIRE(rows.size() == 82);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    CHECK(std::abs(std::stod(rows[i][1]) - analytic_v1_step(x)) <= 1e-8);
  }
}

TEST_CASE("potential expabs/tanh") {
  const auto r = call({"potential", "--dist", "expabs", "--kernel", "tanh", "--grid", "-2:2:5"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(std::stod(rows[3][1]) == doctest::Approx(analytic_ve_exponential(0.0)).epsilon(1e-10));
  CHECK(std::stod(rows[5][1]) == doctest::Approx(analytic_ve_exponential(2.0)).epsilon(1e-10));
}

TEST_CASE("tan kernel without a segment exits 3 with the poles") {
  const auto r = call({"potential", "--dist", "gaussian", "--a", "1", "--kernel", "tan"});
  CHECK(r.code == kPoleOrDomain);
  CHECK(r.err.find("poles:") != std::string::npos);
}

TEST_CASE("tan kernel with a segment") {
  const auto r = call({"potential", "--dist", "unitstep01", "--kernel", "tan", "--segment", "0:1",
                       "--grid", "0.25:2:8"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  check_rectangular(rows);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    CHECK(std::abs(std::stod(rows[i][1]) - potential_tan_step(x, 0.0, 1.0)) <= 1e-10);
  }
}

TEST_CASE("json format") {
  const auto r = call({"eval", "linear-point", "--grid", "0:1:3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["columns"].size() == 2);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0][1].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("verify reports") {
  SUBCASE("linear-point") {
    const auto r = call({"verify", "linear-point", "--k", "1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["source_strength"].get<double>() - 1.0) <= 1e-6);
    CHECK(j["pass"].get<bool>());
  }
  SUBCASE("tanh-point") {
    const auto r = call({"verify", "tanh-point", "--mu", "1", "--lambda", "1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["source_strength"].get<double>() + std::sqrt(2.0)) <= 1e-6);
    CHECK(j["residual_pass"].get<bool>());
    CHECK(j["printed_strength"].get<double>() == 1.0);
  }
  SUBCASE("generic cubic-minus") {
    const auto r = call({"verify", "generic", "--V", "cubic-minus", "--phi0", "0", "--dphi0",
                         "0.7071068"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    // 0.7071068 is 1/sqrt(2) rounded to 7 digits; the solution inherits that offset.
    CHECK(j["fixture_max_deviation"].get<double>() < 1e-5);
  }
  SUBCASE("green-tan") {
    const auto r = call({"verify", "green-tan", "--x1", "1"});
    CHECK(r.code == 0);
  }
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> args = {"potential", "--dist", "bell", "--a", "1", "--b", "1",
                                         "--kernel", "tanh", "--grid", "-3:3:13"};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("figure output") {
  const auto dir = std::filesystem::temp_directory_path() / "nlgreen_test_cli_fig";
  std::filesystem::remove_all(dir);
  SUBCASE("fig1") {
    const auto r = call({"figure", "fig1", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto manifest = nlohmann::json::parse(slurp(dir / "fig1_manifest.json"));
    REQUIRE(manifest["curves"].size() == 4);
    for (const auto& c : manifest["curves"]) {
      const auto rows = parse_csv(slurp(dir / c["file"].get<std::string>()));
      check_rectangular(rows);
      CHECK(rows.size() == 402);
      CHECK(std::abs(std::stod(rows[201][1])) <= 1e-14);
    }
  }
  SUBCASE("fig6a leaves gaps at the poles") {
    const auto r = call({"figure", "fig6a", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(slurp(dir / "fig6a_green_tan.csv"));
    check_rectangular(rows);
    bool gap_near_pole = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double x = std::stod(rows[i][0]);
      if (std::abs(std::abs(x - 1.0) - 2.2214414690791831) < 0.015) {
        CHECK(rows[i][1].empty());
        gap_near_pole = true;
      }
    }
    CHECK(gap_near_pole);
  }
  SUBCASE("determinism") {
    REQUIRE(call({"figure", "fig6b", "--out", dir.string()}).code == 0);
    const std::string first = slurp(dir / "fig6b_tan_step.csv");
    REQUIRE(call({"figure", "fig6b", "--out", dir.string()}).code == 0);
    CHECK(first == slurp(dir / "fig6b_tan_step.csv"));
  }
  SUBCASE("unknown figure") { CHECK(call({"figure", "fig9", "--out", dir.string()}).code == 2); }
  std::filesystem::remove_all(dir);
}
