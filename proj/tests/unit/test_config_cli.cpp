#include "quasiradial/commands.hpp"
#include "quasiradial/config.hpp"
#include "quasiradial/json_writer.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace quasiradial;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("quasiradial_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const nlohmann::json& doc) {
  const fs::path path = dir / "config.json";
  std::ofstream(path) << doc.dump(2);
  return path;
}

int run(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(QUASIRADIAL_EXE) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string first_line(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(example_config("ex1"));
  CHECK(c.dims_exact.N == 4);
  CHECK(c.infinity_exact.gamma == Rational(3));
  CHECK(c.q1_exact == Rational(9));
  CHECK(c.grid.nodes == 2000);
  auto doc = example_config("ex1");
  doc.erase("schema_version");
  CHECK_THROWS_AS(parse_config(doc), ConfigError);
  doc = example_config("ex1");
  doc["schema_version"] = 2;
  CHECK_THROWS_AS(parse_config(doc), ConfigError);
  doc = example_config("ex1");
  doc["asymptotics"]["origin"]["alpha"] = "1/3";
  CHECK(parse_config(doc).origin_exact.alpha == Rational(1, 3));
}

TEST_CASE("sweep strings") {
  const auto s = parse_sweep("nonlinearity.q2=9:10:1/2");
  CHECK(s.key == "nonlinearity.q2");
  REQUIRE(s.values.size() == 3);
  CHECK(s.values.back() == Rational(10));
  CHECK_THROWS(parse_sweep("q2=1:2"));
  nlohmann::json doc = {{"a", {{"b", 1}}}};
  set_json_path(doc, "a.c", 2);
  CHECK(doc["a"]["c"] == 2);
}

TEST_CASE("json output is deterministic") {
  nlohmann::ordered_json j;
  j["z"] = 0.1;
  j["a"] = 1.0 / 3;
  j["n"] = std::nan("");
  const std::string s = dump_json(j);
  CHECK(s.find("\"z\"") < s.find("\"a\""));
  CHECK(s.find("0.33333333333333331") != std::string::npos);
  CHECK(s.find("null") != std::string::npos);
  CHECK(s == dump_json(j));
}

TEST_CASE("region command on the examples") {
  const auto r = cmd_region(parse_config(example_config("ex1")));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output["q2_lower_bound_exact"] == "8");
  CHECK(r.output["q1_interval"]["lower_exact"] == "2");
  CHECK(r.output["q1_interval"]["upper_infinite"] == true);
  CHECK(r.output["admissible"] == true);

  auto doc = example_config("ex2_I");
  CHECK(cmd_region(parse_config(doc)).output["q2_lower_bound_exact"] == "102/13");
  doc["dims"]["N"] = 4;  // a_inf = p - N: formulas only
  CHECK(cmd_region(parse_config(doc)).exit_code == kExitInvalidConfig);

  doc = example_config("ex1");
  doc["asymptotics"]["origin"]["beta"] = "3/2";
  CHECK(cmd_region(parse_config(doc)).exit_code == kExitInvalidConfig);
}

TEST_CASE("exponents are sorted before use") {
  auto doc = example_config("ex2_I");
  doc["nonlinearity"]["q1"] = 9;
  doc["nonlinearity"]["q2"] = 3;
  const auto r = cmd_region(parse_config(doc));
  CHECK(r.output["configured"]["swapped"] == true);
  CHECK(r.output["configured"]["q1_exact"] == "3");
}

TEST_CASE("region plot slice of the first example") {
  auto doc = example_config("ex1");
  doc["region_plot"] = {{"alpha", {0, 1}}, {"q", {1, 5}}, {"resolution", {2, 9}}};
  std::ostringstream csv;
  const auto r = cmd_region_plot(parse_config(doc), csv);
  CHECK(r.exit_code == kExitOk);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha,q,member");
  int rows = 0;
  while (std::getline(in, line)) {
    double alpha, q;
    int member;
    char c1, c2;
    std::istringstream ls(line);
    ls >> alpha >> c1 >> q >> c2 >> member;
    CHECK(member == (q > 2 ? 1 : 0));
    ++rows;
  }
  CHECK(rows == 18);
}

TEST_CASE("region plot boundary follows the closed forms") {
  // gamma < N: member iff max{1, p beta} < q < min{q*, q**}
  nlohmann::json doc = example_config("ex2_I");
  doc["region_plot"] = {{"alpha", {-3, 3}}, {"q", {1, 13}}, {"resolution", {61, 121}}};
  const RunConfig c = parse_config(doc);
  std::ostringstream csv;
  cmd_region_plot(c, csv);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  const double p = 2, N = 5, a = -1, beta = 0, gamma = 4;
  const double dq = 12.0 / 120;
  int mismatched = 0;
  while (std::getline(in, line)) {
    double alpha, q;
    int member;
    char c1, c2;
    std::istringstream ls(line);
    ls >> alpha >> c1 >> q >> c2 >> member;
    const double qs = p * (alpha - gamma * beta + N) / (N - gamma);
    const double qss = p * (p * alpha + (1 - p * beta) * gamma + p * (N - 1) + a) / (p * (N - 1) - (p - 1) * gamma + a);
    const double up = std::min(qs, qss);
    const bool expected = q > 1 && q < up;
    // only pixels within one q-step of the boundary may differ
    if (expected != (member == 1) && std::abs(q - up) > dq && std::abs(q - 1) > dq) ++mismatched;
  }
  CHECK(mismatched == 0);
}

TEST_CASE("command line exit codes") {
  const fs::path dir = scratch("cli");
  const fs::path out = dir / "stdout.txt";

  const auto ex1 = write_config(dir, example_config("ex1"));
  CHECK(run("region --config " + ex1.string(), out) == 0);
  CHECK(run("check --config " + ex1.string(), out) == 0);

  auto bad = example_config("ex1");
  bad["asymptotics"]["origin"]["beta"] = 2;
  CHECK(run("region --config " + write_config(dir, bad).string(), out) == 2);

  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(run("region --config " + (dir / "broken.json").string(), out) == 2);

  auto high_a = example_config("ex1");
  high_a["asymptotics"]["origin"]["a"] = "21/10";
  CHECK(run("check --config " + write_config(dir, high_a).string(), out) == 3);
  CHECK(run("solve --config " + write_config(dir, high_a).string(), out) == 3);

  auto zero = example_config("ex1");
  zero["nonlinearity"] = {{"kind", "zero"}, {"q", 9}};
  zero["grid"] = {{"nodes", 200}};
  CHECK(run("solve --config " + write_config(dir, zero).string(), out) == 5);

  auto capped = example_config("ex1");
  capped["solver"] = {{"max_iter", 2}, {"truncation_check", false}};
  capped["grid"] = {{"nodes", 300}};
  CHECK(run("solve --config " + write_config(dir, capped).string(), out) == 4);
}

TEST_CASE("solve writes its outputs") {
  const fs::path dir = scratch("solve");
  auto doc = example_config("ex1");
  doc["grid"] = {{"nodes", 800}};
  const auto cfg = write_config(dir, doc);
  CHECK(run("solve --config " + cfg.string() + " --out " + (dir / "o").string(), dir / "stdout.txt") == 0);
  CHECK(first_line(dir / "o" / "solution.csv") == "r,u");
  std::ifstream in(dir / "o" / "report.json");
  const auto report = nlohmann::json::parse(in);
  CHECK(report["status"] == "converged");
  CHECK(report["report"]["residual"].get<double>() < 1e-5);
  CHECK(report["schema_version"] == 1);

  CHECK(run("probe --config " + cfg.string() + " --out " + (dir / "p").string(), dir / "stdout.txt") == 0);
  CHECK(first_line(dir / "p" / "probe_S0.csv") == "R,value");
  CHECK(first_line(dir / "p" / "probe_Sinf.csv") == "R,value");
  CHECK(run("region-plot --config " + cfg.string() + " --out " + (dir / "g").string(), dir / "stdout.txt") == 0);
  CHECK(first_line(dir / "g" / "region.csv") == "alpha,q,member");
}

TEST_CASE("sweep over q2") {
  const fs::path dir = scratch("sweep");
  const auto cfg = write_config(dir, example_config("ex2_I"));
  const fs::path out = dir / "stdout.txt";
  CHECK(run("region --config " + cfg.string() + " --sweep nonlinearity.q2=7:9:1", out) == 0);
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  REQUIRE(j["runs"].size() == 3);
  CHECK(j["runs"][0]["result"]["admissible"] == false);
  CHECK(j["runs"][2]["result"]["admissible"] == true);
}

TEST_CASE("example assertions") {
  const auto r = cmd_example("ex1", {}, Rational(10));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output["assertions_passed"] == true);
  CHECK(r.output["thresholds"]["q_star_inf_exact"] == "8");
  CHECK(r.output["thresholds"]["q1_lower_exact"] == "2");
  const auto doc = example_config("ex2_II");
  const auto set = q1_admissible_set(parse_config(doc).origin_exact, parse_config(doc).dims_exact);
  CHECK(*set.upper == Rational(13));
  CHECK(smallest_d_with_qss_above_qs(ProblemDims<Rational>{4, Rational(2)}, Rational(0), Rational(20),
                                     Rational(1, 2)) == Rational(1));
}
