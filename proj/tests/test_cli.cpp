#include "discenv/cli.hpp"
#include "discenv/io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace discenv;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "discenv");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  const int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str(), err.str()};
}

fs::path workdir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "discenv_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name, const std::string& text) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

io::json artifact(const std::string& path) { return io::parse_json(slurp(path)); }

const char* kOneT = R"({"m": 2, "degree": 1, "coeffs": [[[1,0],[0,0]], [[0,0],[1,0]]]})";

} // namespace

TEST_CASE("functional eval writes the artifact and prints only its path") {
  const auto disc = file("one_t.json", kOneT);
  const auto out = (workdir() / "f.json").string();
  const auto r = run({"functional", "eval", "--disc", disc, "--route", "lifted", "--out", out});
  REQUIRE(r.code == 0);
  CHECK(r.out == out + "\n");
  const auto j = artifact(out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["config"]["command"] == "functional eval");
  CHECK(std::abs(j["result"]["total"].get<double>() - 0.5 * std::log(2.0)) < 1e-14);
  CHECK(j["result"]["route"] == "lifted");

  const auto r2 = run({"functional", "eval", "--disc", disc, "--nodes", "256", "--radial", "64", "--angular", "128",
                       "--out", out});
  REQUIRE(r2.code == 0);
  const auto j2 = artifact(out);
  CHECK(j2["config"]["quadrature"]["nodes"] == 256);
  CHECK(std::abs(j2["result"]["total"].get<double>() - 0.5 * std::log(2.0)) < 1e-8);
}

TEST_CASE("S-Z functional through the CLI") {
  const auto disc = file("sz.json", R"({"m": 2, "coeffs": [[[-0.5,0],[1,0]], [[1,0],[0,0]]]})");
  const auto out = (workdir() / "sz_out.json").string();
  for (const char* route : {"jensen", "direct"}) {
    const auto r = run({"functional", "eval", "--kind", "sz", "--disc", disc, "--route", route, "--out", out});
    REQUIRE(r.code == 0);
    CHECK(std::abs(artifact(out)["result"]["total"].get<double>() - std::log(2.0)) < 1e-12);
  }
}

TEST_CASE("malformed JSON gives a line and column") {
  const auto bad = file("bad.json", "{\n  \"m\": 2,\n  \"coeffs\": [[[1, 0]] oops\n}\n");
  const auto r = run({"functional", "eval", "--disc", bad, "--out", (workdir() / "x.json").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("bad.json:3:") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("exit codes") {
  const auto disc = file("one_t2.json", kOneT);
  const auto ball = file("ball.json", R"({"type": "fs_ball", "center": {"homogeneous": [[1,0],[0,0]]}, "radius": 0.3})");
  const auto out = (workdir() / "e.json").string();
  CHECK(run({"functional", "eval", "--disc", disc, "--domain", ball, "--out", out}).code == 2);

  const auto through = file("origin.json", R"({"m": 2, "coeffs": [[[0.5,0],[0,0]], [[1,0],[0,0]]]})");
  CHECK(run({"functional", "eval", "--disc", through, "--out", out}).code == 3);

  CHECK(run({"functional", "eval", "--disc", disc, "--route", "sideways", "--out", out}).code == 1);
  CHECK(run({"functional", "eval"}).code == 1);
  CHECK(run({"no-such-command"}).code == 1);
  CHECK(run({"functional", "eval", "--disc", (workdir() / "missing.json").string()}).code == 1);
}

TEST_CASE("identity-check") {
  const auto out = (workdir() / "id.json").string();
  const auto r0 = run({"identity-check", "--discs", "0", "--out", out});
  CHECK(r0.code == 0);
  CHECK(artifact(out)["result"]["residuals"].empty());

  const auto r1 = run({"identity-check", "--discs", "4", "--nodes", "256", "--radial", "64", "--angular", "128",
                       "--tol", "1e-15", "--out", out});
  CHECK(r1.code == 1);
  const auto j = artifact(out);
  CHECK_FALSE(j["result"]["passed"].get<bool>());
  CHECK(j["result"].contains("worst_disc"));
  CHECK(j["result"]["table"].size() == 2);

  const auto r2 = run({"identity-check", "--discs", "4", "--out", out});
  CHECK(r2.code == 0);
}

TEST_CASE("envelope and grid") {
  const auto dom = file("unit.json", R"({"type": "fs_ball", "affine_radius": 1.0})");
  const auto pt = file("two.json", R"({"affine": [[2, 0]]})");
  const auto out = (workdir() / "env.json").string();
  const std::vector<std::string> args = {"envelope", "--point", pt, "--domain", dom, "--mode", "sz", "--degree", "2",
                                         "--starts", "3", "--evals", "300", "--out", out};
  REQUIRE(run(args).code == 0);
  const auto first = slurp(out);
  const auto j = io::parse_json(first);
  CHECK(j["result"]["found"].get<bool>());
  CHECK(std::abs(j["result"]["upper"].get<double>() - std::log(2.0)) < 5e-2);
  CHECK(j["config"]["optimizer"]["degree"] == 2);
  REQUIRE(run(args).code == 0);
  CHECK(slurp(out) == first);

  const auto pts = file("pts.json", R"({"points": [{"affine": [[0.5, 0]]}, {"affine": [[2, 0]]}]})");
  const auto csv = (workdir() / "grid.csv").string();
  REQUIRE(run({"grid", "--points", pts, "--domain", dom, "--mode", "sz", "--degree", "2", "--starts", "2", "--evals",
               "200", "--out", csv})
              .code == 0);
  std::istringstream lines(slurp(csv));
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# {", 0) == 0);
  std::getline(lines, line);
  CHECK(line == "point,upper,lower,gap,degree");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 2);

  REQUIRE(run({"envelope", "grid", "--points", pts, "--domain", dom, "--mode", "sz", "--degree", "2", "--starts", "2",
               "--evals", "200", "--out", csv})
              .code == 0);
  CHECK(run({"envelope", "--domain", dom, "--out", out}).code == 1);
}

TEST_CASE("hull commands") {
  std::string samples = "[";
  for (int j = 0; j < 128; ++j) {
    if (j) samples += ",";
    const double th = 2 * M_PI * j / 128;
    samples += "{\"affine\": [[" + std::to_string(std::cos(th)) + "," + std::to_string(std::sin(th)) + "]]}";
  }
  samples += "]";
  const auto k = file("K.json", "{\"name\": \"circle\", \"connected\": true, \"samples\": " + samples + "}");
  const auto x = file("x.json", R"({"homogeneous": [[1,0],[0,0]]})");
  const auto out = (workdir() / "hull.json").string();

  REQUIRE(run({"hull", "test", "--point", x, "--set", k, "--lambda", "0.5", "--eps", "0.01", "--delta", "0.05",
               "--degree", "2", "--starts", "2", "--evals", "200", "--out", out})
              .code == 0);
  const auto j = artifact(out);
  CHECK(j["result"]["certified"].get<bool>());
  CHECK(j["result"]["revalidation"]["ok"].get<bool>());
  CHECK(j["result"]["certificate"]["value"].get<double>() <= 0.5 * std::log(2.0) + 1e-6);

  CHECK(run({"hull", "test", "--point", x, "--set", k, "--rho", "0.6", "--degree", "2", "--starts", "1", "--evals",
             "50", "--out", out})
            .code == 0);
  CHECK(run({"hull", "test", "--point", x, "--set", k, "--lambda", "0.5", "--rho", "0.6", "--out", out}).code == 1);

  REQUIRE(run({"hull", "schedule", "--point", x, "--set", k, "--deltas", "0.3,0.1", "--degree", "2", "--starts", "2",
               "--evals", "200", "--out", out})
              .code == 0);
  const auto est = artifact(out)["result"]["estimates"];
  CHECK(est.size() == 2);
  CHECK(run({"hull", "schedule", "--point", x, "--set", k, "--deltas", "0.1,abc", "--out", out}).code == 1);

  const auto disc = file("one_t3.json", kOneT);
  REQUIRE(run({"hull", "normalize", "--disc", disc, "--r", "0.999", "--out", out}).code == 0);
  const auto n = artifact(out)["result"];
  CHECK(n["disc"]["type"] == "composite");
  CHECK(n["max_boundary_deviation"].get<double>() <= 1e-3);
  CHECK(run({"hull", "normalize", "--disc", disc, "--r", "1.5", "--out", out}).code == 1);
}

TEST_CASE("disc-structure commands") {
  const auto dom = file("hyp.json", R"({"type": "hyperplane_complement", "normal": [[0,0],[0,0],[1,0]]})");
  const auto x = file("sx.json", R"({"homogeneous": [[1,0],[0.5,0.5],[2,0]]})");
  const auto w = file("sw.json", R"({"homogeneous": [[0.8,0.1],[0.9,0],[1.5,0]]})");
  const auto out = (workdir() / "ds.json").string();
  REQUIRE(run({"disc-structure", "make", "--x", x, "--w", w, "--domain", dom, "--out", out}).code == 0);
  const auto j = artifact(out)["result"];
  CHECK(j["disc"]["degree"] == 1);
  CHECK(j["feasibility"]["feasible"].get<bool>());
  const auto c0 = io::vector_from_json(j["disc"]["coeffs"][0]);
  CHECK((c0 - io::vector_from_json(io::parse_json(R"([[1,0],[0.5,0.5],[2,0]])"))).norm() == 0.0);

  REQUIRE(run({"disc-structure", "epsilon-test", "--x", x, "--domain", dom, "--eps", "0.01", "--out", out}).code == 0);
  CHECK(artifact(out)["result"]["success"].get<bool>());

  CHECK(run({"disc-structure", "make", "--x", x, "--w", x, "--domain", dom, "--out", out}).code == 1);
}
