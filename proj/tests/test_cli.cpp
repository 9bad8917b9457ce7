#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " " + std::string(POLYTF_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    std::vector<std::string> row;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("spectrum emits the chebyshev eigenvalues as csv") {
  const auto r = run("spectrum --family chebyshev1 --m 0 --n 4");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"k", "x"});
  for (int k = 1; k <= 5; ++k) {
    const double want = std::cos((11.0 - 2.0 * k) / 10.0 * kPi);
    CHECK(std::stod(rows[static_cast<size_t>(k)][1]) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("quad emits equal chebyshev weights") {
  const auto r = run("quad --family chebyshev1 --nodes 5");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"node", "weight"});
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(rows[i][1]) == doctest::Approx(kPi / 5.0).epsilon(1e-13));

  const auto j = run("quad --family legendre --nodes 32 --format json");
  CHECK(j.exit_code == 0);
  const json parsed = json::parse(j.out);
  CHECK(parsed.at("nodes").size() == 32);
  CHECK(parsed.at("weights").size() == 32);
  double mass = 0.0;
  for (double w : parsed["weights"]) mass += w;
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("psi emits finite samples of the requested size") {
  const auto r =
      run("psi --family chebyshev1 --m 8 --n 32 --k 15 --samples 512");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 513);
  CHECK(rows[0] == std::vector<std::string>{"x", "psi"});
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(std::isfinite(std::stod(rows[i][1])));
}

TEST_CASE("psi samples re-integrated by a quad rule have unit norm") {
  const auto q = run("quad --family legendre --nodes 16 --format json "
                     "--output /tmp/polytf_nodes.json");
  CHECK(q.exit_code == 0);
  const auto p = run("psi --family legendre --m 0 --n 8 --k 5 "
                     "--nodes-from /tmp/polytf_nodes.json --format json");
  CHECK(p.exit_code == 0);
  const json rule = json::parse(std::ifstream("/tmp/polytf_nodes.json"));
  const json psi = json::parse(p.out);
  const auto weights = rule.at("weights").get<std::vector<double>>();
  const auto values = psi.at("psi").get<std::vector<double>>();
  REQUIRE(weights.size() == values.size());
  double norm2 = 0.0;
  for (size_t i = 0; i < weights.size(); ++i)
    norm2 += weights[i] * values[i] * values[i];
  CHECK(std::abs(norm2 - 1.0) <= 1e-6);
}

TEST_CASE("variance-sweep emits one block per requested n") {
  const auto r = run("variance-sweep --family jacobi --alpha 0 --beta 0 "
                     "--m 0 --n 16,32 --select mid");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"n", "k", "x", "var"});
  CHECK(std::stod(rows[1][3]) > std::stod(rows[2][3]));  // variance decays
}

TEST_CASE("approx reads coefficients and reports a reconstruction") {
  {
    std::ofstream f("/tmp/polytf_coeffs.json");
    f << R"({"m0": 8, "coeffs": [1.0]})";
  }
  const auto r = run("approx --family chebyshev1 --m 8 --n 32 "
                     "--interval -0.2,0.6 --input /tmp/polytf_coeffs.json");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep.contains("selected"));
  CHECK(rep.contains("residual"));
  CHECK(rep.at("residual").get<double>() >= 0.0);
  CHECK(rep.at("residual").get<double>() <= 1.0 + 1e-12);
}

TEST_CASE("uncertainty grid covers the rectangle with known labels") {
  // the excluded corners live above x_max = cos(pi/10), so the grid must be
  // fine enough to place samples beyond it
  const auto r = run("uncertainty --family chebyshev1 --m 0 --n 4 --grid 60");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1 + 60 * 60);
  CHECK(rows[0] == std::vector<std::string>{"eps", "pi", "label"});
  int a_count = 0, c_count = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const std::string& label = rows[i][2];
    const bool known = label == "A" || label == "B1" || label == "B2" ||
                       label == "C1" || label == "C2" || label == "boundary";
    CHECK(known);
    if (label == "A") ++a_count;
    if (label == "C1" || label == "C2") ++c_count;
  }
  CHECK(a_count > 3000);  // the attainable region dominates the rectangle
  CHECK(c_count > 0);     // the excluded corners appear at this resolution
}

TEST_CASE("uncertainty-witness hits its target") {
  const auto r = run("uncertainty-witness --family chebyshev1 --m 0 --n 10 "
                     "--target-eps 0.9 --target-pi 0.3");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(std::abs(rep["achieved"]["eps"].get<double>() - 0.9) <= 1e-8);
  CHECK(std::abs(rep["achieved"]["pi"].get<double>() - 0.3) <= 1e-8);
}

TEST_CASE("identical configurations produce byte-identical output") {
  const std::string cmd =
      "uncertainty --family legendre --m 0 --n 8 --random-trials 200 --seed 7";
  const auto a = run(cmd);
  const auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // thread cap must not change the emitted rows
  const auto c = run(cmd, "POLYTF_THREADS=1");
  const auto d = run(cmd, "POLYTF_THREADS=2");
  CHECK(c.out == d.out);
  CHECK(a.out == c.out);
  // a different seed gives a different sample
  const auto e = run("uncertainty --family legendre --m 0 --n 8 "
                     "--random-trials 200 --seed 8");
  CHECK(e.out != a.out);
}

TEST_CASE("configuration errors exit with status 2") {
  CHECK(run("no-such-subcommand").exit_code == 2);
  CHECK(run("spectrum --no-such-flag 1").exit_code == 2);
  CHECK(run("spectrum --family klingon --m 0 --n 4").exit_code == 2);
  CHECK(run("spectrum --family jacobi --alpha -2 --beta 0 --m 0 --n 4")
            .exit_code == 2);
  CHECK(run("spectrum --family chebyshev1 --m 5 --n 4").exit_code == 2);
  CHECK(run("approx --family chebyshev1 --m 0 --n 4 --input /nonexistent.json")
            .exit_code == 2);
}

TEST_CASE("numerical failures exit with status 3") {
  // a target this deep in the corner needs an outer window beyond the cap
  const auto r = run("uncertainty-witness --family chebyshev1 --m 0 --n 10 "
                     "--target-eps 0.9999999 --target-pi 1e-6");
  CHECK(r.exit_code == 3);
}

TEST_CASE("weight family can come from a json config file") {
  {
    std::ofstream f("/tmp/polytf_cfg.json");
    f << R"({"family":"jacobi","alpha":0.5,"beta":-0.5})";
  }
  const auto direct =
      run("spectrum --family jacobi --alpha 0.5 --beta -0.5 --m 0 --n 6");
  const auto via_cfg = run("spectrum --config /tmp/polytf_cfg.json --m 0 --n 6");
  CHECK(via_cfg.exit_code == 0);
  CHECK(via_cfg.out == direct.out);

  {
    std::ofstream f("/tmp/polytf_custom.json");
    f << R"({"family":"custom","a":[0,0,0],"b":[1.0,0.5,0.5],"tail":"constant"})";
  }
  const auto custom = run("spectrum --config /tmp/polytf_custom.json --m 0 --n 6");
  CHECK(custom.exit_code == 0);
}
