#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "pu21/bending.hpp"
#include "pu21/io.hpp"
#include "support.hpp"

using namespace pu21;
namespace ts = testing_support;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("pu21_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

// Exit status of the CLI with stdout sent to out (or discarded) and stderr discarded.
int run(const std::string& args, const fs::path& out = {}) {
  const std::string target = out.empty() ? std::string("/dev/null") : out.string();
  const std::string cmd = std::string("\"") + PU21_CLI + "\" " + args + " > \"" + target + "\" 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

const std::string kBuildArgs = "build --s1 -0.615 --s2 1.36 --t45 1.36 --root 1";

}  // namespace

TEST_CASE("verify-example") {
  const fs::path dir = scratch();
  CHECK(run("verify-example") == 0);
  CHECK(run("verify-example --eq-tol 0.1") == 0);
  CHECK(run("verify-example --eq-tol -1") == 4);

  Json fx = ts::fixture_json();
  fx["points"]["p4"][1][0] = fx["points"]["p4"][1][0].get<double>() + 1e-3;
  write(dir / "corrupt.json", fx.dump());
  CHECK(run("verify-example --input " + quoted(dir / "corrupt.json")) == 2);
  CHECK(run("verify-example --input " + quoted(dir / "missing.json")) == 4);
}

TEST_CASE("build, then check the written pentagon") {
  const fs::path dir = scratch();
  REQUIRE(run(kBuildArgs + " --output " + quoted(dir / "p.json"), dir / "build_report.json") == 0);
  REQUIRE(run("check --input " + quoted(dir / "p.json"), dir / "check_report.json") == 0);
  const Json built = Json::parse(slurp(dir / "build_report.json"));
  const Json checked = Json::parse(slurp(dir / "check_report.json"));
  CHECK(built["quadrangle"]["all_ok"] == true);
  CHECK(built["quadrangle"]["q1"] == checked["quadrangle"]["q1"]);
  for (const auto& [name, v] : built["quadrangle"]["slacks"].items())
    CHECK(std::abs(v.get<double>() - checked["quadrangle"]["slacks"][name].get<double>()) <
          1e-8 * std::max(1.0, std::abs(v.get<double>())));
  CHECK(std::abs(checked["coords"]["s"].get<double>() - built["coords"]["s"].get<double>()) < 1e-9);

  const Pentagon pent = load_pentagon((dir / "p.json").string());
  CHECK(relation_residual(pent) < 1e-10);

  // without --output the pentagon and report come together
  REQUIRE(run(kBuildArgs, dir / "both.json") == 0);
  const Json both = Json::parse(slurp(dir / "both.json"));
  CHECK(both.contains("pentagon"));
  CHECK(both.contains("report"));
}

TEST_CASE("build failures") {
  CHECK(run("build --s1 -0.615 --s2 1.36 --t45 1.36 --delta 1") == 3);
  CHECK(run("build --s1 -0.615 --s2 1.36 --t45 0.5") == 3);
  CHECK(run("build --s1 -0.615 --s2 1.36 --t45 1.36 --root 7") == 3);
  CHECK(run("build --s1 -0.615 --s2 1.36 --t45 1.36 --delta omega3") == 4);
  CHECK(run("build --s1 -0.615 --s2 1.36") == 4);
  CHECK(run("build --s1 -0.615 --s2 1.36 --t45 1.36 --tau \"[-2.22, 3.0]\"") == 3);
}

TEST_CASE("input errors") {
  const fs::path dir = scratch();
  write(dir / "empty.json", "");
  CHECK(run("check --input " + quoted(dir / "empty.json")) == 4);
  CHECK(run("invariants --input " + quoted(dir / "empty.json")) == 4);
  CHECK(run("check") == 4);
  CHECK(run("no-such-command") == 4);
  CHECK(run("check --input " + quoted(fs::path(PU21_FIXTURE)) + " --witness \"[1, 2]\"") == 4);
}

TEST_CASE("check and invariants on the fixture and a far bending") {
  const fs::path dir = scratch();
  const std::string fx = quoted(fs::path(PU21_FIXTURE));
  CHECK(run("check --input " + fx) == 0);
  REQUIRE(run("invariants --input " + fx, dir / "inv.json") == 0);
  const Json inv = Json::parse(slurp(dir / "inv.json"));
  CHECK(inv["toledo"]["tau"] == "-1/3");
  CHECK(inv["euler"]["e"] == "0");

  write(dir / "far.json", pentagon_to_json(bend_pentagon(ts::fixture(), 2, 2.0)).dump(2));
  CHECK(run("check --input " + quoted(dir / "far.json")) == 2);
  CHECK(run("invariants --input " + quoted(dir / "far.json")) == 5);
}

TEST_CASE("bend-scan") {
  const fs::path dir = scratch();
  const std::string fx = quoted(fs::path(PU21_FIXTURE));
  CHECK(run("bend-scan --input " + fx + " --dtheta 0") == 4);
  CHECK(run("bend-scan --input " + fx + " --pair 6") == 4);
  CHECK(run("bend-scan --input " + fx + " --format xml") == 4);

  const std::string args = "bend-scan --input " + fx + " --pair 2 --steps-pos 20 --steps-neg 20";
  REQUIRE(run(args, dir / "a.csv") == 0);
  REQUIRE(run(args, dir / "b.csv") == 0);
  const std::string a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a.rfind(scan_csv_header() + "\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 42);

  REQUIRE(run(args + " --format json", dir / "a.json") == 0);
  const Json rows = Json::parse(slurp(dir / "a.json"));
  CHECK(rows.size() == 41);
  fs::remove_all(dir);
}
