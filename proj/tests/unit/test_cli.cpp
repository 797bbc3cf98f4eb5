#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ghl/cli.hpp"
#include "ghl/report.hpp"

namespace fs = std::filesystem;
using namespace ghl;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ghl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "ghl_cli_test";
  fs::create_directories(d);
  return d / name;
}

}  // namespace

TEST_CASE("hierarchy print emits the canonical flux first") {
  const Run r = run({"hierarchy", "print", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("+u5x +10*mu^2*u3x +20*mu*u*u3x", 0) == 0);
  CHECK(r.out.find("# a = 10 1") != std::string::npos);
  const Run j = run({"hierarchy", "print", "--n", "3", "--mu0", "--format", "json"});
  CHECK(j.code == 0);
  const json parsed = json::parse(j.out);
  CHECK(parsed["a"] == json::array({"70", "14", "1"}));
  CHECK(parsed["flux"].get<std::string>().find("mu") == std::string::npos);
}

TEST_CASE("verify ode passes and writes the report schema") {
  const fs::path rep = scratch("ode.json");
  const Run r = run({"verify", "ode", "--n", "3", "--alpha", "1", "--beta", "1", "--mu", "0.3",
                     "--report", rep.string()});
  CHECK(r.code == 0);
  const json j = json::parse(slurp(rep));
  for (const char* key : {"test", "params", "residual_inf", "residual_l2", "tolerance", "pass"})
    CHECK(j.contains(key));
  CHECK(j["pass"] == true);
  CHECK(j["residual_inf"].get<double>() < 1e-7);
  CHECK(fs::exists(rep.string() + ".manifest.json"));
}

TEST_CASE("reports are deterministic") {
  const fs::path a = scratch("m1.json"), b = scratch("m2.json");
  run({"verify", "miura", "--n", "2", "--seed", "7", "--report", a.string()});
  run({"verify", "miura", "--n", "2", "--seed", "7", "--report", b.string()});
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("verify: params JSON, and failure exits with 1") {
  const Run r = run({"verify", "pde", "--params",
                     R"({"kind": "breather", "n": 2, "alpha": 1, "beta": 1, "mu": 0.1})"});
  CHECK(r.code == 0);
  // 16 points cannot resolve the profile, so the first variation is far from zero
  const Run bad = run({"verify", "critical-point", "--alpha", "1", "--beta", "1", "--mu", "0.3",
                       "--N", "16", "--L", "40"});
  CHECK(bad.code == 1);
}

TEST_CASE("solution sample writes CSV and manifest") {
  const fs::path csv = scratch("sol.csv");
  const Run r = run({"solution", "sample", "--kind", "breather", "--params",
                     R"({"alpha": 1, "beta": 1, "mu": 0.2, "n": 2})", "--grid", "10,64", "--t",
                     "0.5", "--out", csv.string()});
  CHECK(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("x,u\n-10,", 0) == 0);
  const json m = json::parse(slurp(csv.string() + ".manifest.json"));
  CHECK(m["command"] == "solution sample");
  CHECK(m["outputs"][0] == csv.string());
  CHECK(m.contains("version"));
  CHECK(m.contains("timestamp"));
}

TEST_CASE("periodic solve") {
  const Run r = run({"periodic", "--beta", "1", "--k", "0.058823529411764705", "--order", "7"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["alpha"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(j["pass"] == true);
  CHECK(run({"periodic", "--beta", "1", "--k", "0"}).code == 2);
}

TEST_CASE("evolve writes checkpoints, drift and manifest") {
  const fs::path dir = scratch("evo");
  fs::remove_all(dir);
  const Run r = run({"evolve", "--n", "1", "--mu", "0.1", "--init", "soliton", "--c", "1",
                     "--T", "0.2", "--grid", "30,256", "--checkpoints", "2", "--out",
                     dir.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "checkpoint_002.csv"));
  const json d = json::parse(slurp(dir / "drift.json"));
  CHECK(d["max"].get<double>() < 1e-8);
  CHECK(fs::exists(dir / "manifest.json"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hierarchy", "print"}).code == 2);
  CHECK(run({"hierarchy", "print", "--n", "12"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "ode", "--params", "{not json"}).code == 2);
  CHECK(run({"verify", "ode", "--params", R"({"bogus": 1})"}).code == 2);
  CHECK(run({"illposed", "--alpha", "1.5"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the installed binary runs") {
  const std::string cmd = std::string(GHL_CLI_PATH) + " hierarchy print --n 1 > " +
                          scratch("bin.txt").string();
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(scratch("bin.txt")).rfind("+u3x", 0) == 0);
}
