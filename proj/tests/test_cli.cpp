#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include <gact/io.hpp>

#include <cstdio>
#include <fstream>

using namespace gact;
using namespace gact::testing;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GACT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string demo(const std::string& name) { return std::string(GACT_DEMO_DIR) + "/" + name; }

}  // namespace

TEST_CASE("props command") {
  auto r = run_cli("props --file " + demo("projective_threefold.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("proper") != std::string::npos);
  CHECK(r.output.find("(1,0)") != std::string::npos);
  CHECK(r.output.find("(1/2,1/2)") != std::string::npos);
}

TEST_CASE("eval and piece commands") {
  auto r = run_cli("eval --file " + demo("projective_threefold.json") + " --m 2,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1*[t]") != std::string::npos);
  CHECK(r.output.find("-1*[t - 1]") != std::string::npos);

  auto zero = run_cli("eval --file " + demo("projective_threefold.json") + " --m 0,0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("= 0") != std::string::npos);

  auto p = run_cli("piece --file " + demo("projective_threefold.json") + " --m 2,0");
  CHECK(p.exit_code == 0);
  CHECK(p.output.find("dim A_(2,0) = 2") != std::string::npos);
}

TEST_CASE("horizontal command accepts and rejects with exit codes") {
  // characteristic zero: the wild floor inequality fails
  auto r = run_cli("horizontal --file " + demo("projective_threefold.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("rejected at (iv)") != std::string::npos);
  CHECK(r.output.find("witness") != std::string::npos);

  // the hyperbolic surface accepts with the larger twist
  auto h = run_cli("horizontal --file " + demo("hyperbolic_surface.json"));
  CHECK(h.exit_code == 0);
  CHECK(h.output.find("s1 = 6") != std::string::npos);
  CHECK(h.output.find("(64,-13)") != std::string::npos);
  CHECK(h.output.find("exact (rank one)") != std::string::npos);

  // forcing only the small twist rejects with a witness
  auto f = run_cli("horizontal --file " + demo("hyperbolic_surface.json") + " --s-list 2");
  CHECK(f.exit_code == 1);
  CHECK(f.output.find("rejected at (iv)") != std::string::npos);
}

TEST_CASE("apply command renders the exponential") {
  auto r = run_cli("apply --alpha --file " + demo("hyperbolic_surface.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(t^2 + t)*X^-5 + t^-11*X^59*a^64 + t^-50*X^251*a^256 + t^-63*X^315*a^320") !=
        std::string::npos);

  auto v = run_cli("apply --file " + demo("vertical_action.json"));
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("X^(0,1) + (t^2 - 2*t + 1)/(t)*X^(2,0)*x") != std::string::npos);
}

TEST_CASE("verify command and negative control exit codes") {
  auto r = run_cli("verify --file " + demo("hyperbolic_surface.json") + " --max-i 8 --bound 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all axioms hold") != std::string::npos);

  auto v = run_cli("verify --file " + demo("vertical_action.json") + " --max-i 4 --bound 2");
  CHECK(v.exit_code == 0);

  // corrupt the vertical multiplier so it is no longer a section
  json j;
  {
    std::ifstream in(demo("vertical_action.json"));
    j = json::parse(in);
  }
  j["lfihd"]["phi"] = json{{"num", {1}}};
  std::string bad_path = "corrupted_spec.json";
  std::ofstream(bad_path) << j.dump(2);
  auto bad = run_cli("verify --file " + bad_path + " --max-i 4 --bound 2");
  CHECK(bad.exit_code == 2);  // rejected at parse: phi fails the section invariant
  CHECK(bad.output.find("not a section") != std::string::npos);
  std::remove(bad_path.c_str());
}

TEST_CASE("json output and byte-identical round trips") {
  auto r = run_cli("horizontal --json --file " + demo("hyperbolic_surface.json"));
  CHECK(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["accepted"] == true);
  CHECK(j["certificate"]["d"] == 5);
  CHECK(j["certificate"]["root_hat"] == json({64, -13}));

  for (auto name : {"projective_threefold.json", "hyperbolic_surface.json", "vertical_action.json"}) {
    std::ifstream in(demo(name));
    json raw = json::parse(in);
    ProblemFile pf = parse_problem(raw);
    std::string once = problem_json(pf).dump(2);
    ProblemFile again = parse_problem(json::parse(once));
    CHECK(problem_json(again).dump(2) == once);
  }
}

TEST_CASE("input errors exit with code two") {
  auto r = run_cli("props --file /nonexistent.json");
  CHECK(r.exit_code == 2);
  auto bad = run_cli("eval --file " + demo("projective_threefold.json") + " --m -1,0");
  CHECK(bad.exit_code == 2);
}
