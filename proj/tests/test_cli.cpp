#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "sgk/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sgkit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = sgk::cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / "sgkit_test_cli";
  fs::create_directories(d);
  return d / name;
}

const std::vector<std::string> kKinkA = {"--family", "kink-a", "--r", "0.03125", "--eta", "0.5"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("periods reports passing relations") {
  Run r = run(with({"periods"}, kKinkA));
  CHECK(r.code == 0);
  auto j = sgk::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["spectrum"]["family"] == "kink-a");
  CHECK(j["relations"].size() > 0);
}

TEST_CASE("case and kind select the family") {
  Run r = run({"periods", "--case", "b", "--kind", "kink", "--eta1", "1", "--eta2", "0.4"});
  CHECK(r.code == 0);
  CHECK(sgk::json::parse(r.out)["spectrum"]["family"] == "kink-b");
}

TEST_CASE("invalid input exits with 2 and a JSON error") {
  Run r = run({"periods", "--case", "b", "--kind", "breather", "--phi1", "2.0", "--phi2", "1.0"});
  CHECK(r.code == 2);
  CHECK(sgk::json::parse(r.err)["error"] == "ParamOutOfRange");
  CHECK(run({"periods", "--family", "kink-a", "--r", "0.03"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run(with({"periods", "--bogus", "1"}, kKinkA)).code == 2);
  CHECK(run({"verify", "--filter", "nonexistent"}).code == 2);
  CHECK(run(with({"eval", "--grid", "10by10"}, kKinkA)).code == 2);
}

TEST_CASE("help exits with 0") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("floquet-scan") != std::string::npos);
}

TEST_CASE("failed relations exit with 1") {
  CHECK(run(with({"periods", "--tol", "1e-30"}, kKinkA)).code == 1);
}

TEST_CASE("eval writes a deterministic CSV grid") {
  auto args = with({"eval", "--grid", "5x3", "--x0", "-1", "--x1", "1", "--t0", "0", "--t1", "1"}, kKinkA);
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("x,t,u\n", 0) == 0);
  CHECK(a.out.find('\r') == std::string::npos);
  std::size_t lines = std::count(a.out.begin(), a.out.end(), '\n');
  CHECK(lines == 1 + 15);
}

TEST_CASE("eval to a file writes a metadata sidecar") {
  fs::path out = scratch("grid.csv");
  fs::remove(out);
  fs::remove(out.string() + ".json");
  Run r = run(with({"eval", "--grid", "11x11", "--x0", "-0.5", "--x1", "0.5", "--t0", "-0.5", "--t1", "0.5", "--out",
                    out.string()},
                   kKinkA));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out).rfind("x,t,u\n", 0) == 0);
  auto meta = sgk::json::parse(slurp(out.string() + ".json"));
  CHECK(meta["model"].contains("C"));
  CHECK(meta["pde_residual"]["max"].get<double>() < 1e-4);
}

TEST_CASE("eval JSON and theta representation") {
  Run r = run(with({"eval", "--grid", "3x2", "--format", "json", "--repr", "theta"}, kKinkA));
  CHECK(r.code == 0);
  auto j = sgk::json::parse(r.out);
  CHECK(j["u"].size() == 2);
  CHECK(j["u"][0].size() == 3);
  CHECK(j["pde_residual"].is_null());
}

TEST_CASE("numbers carry 17 significant digits") {
  CHECK(sgk::format_double(0.1) == "0.10000000000000001");
  CHECK(sgk::format_double(-2.5) == "-2.5");
}

TEST_CASE("config file with flag precedence") {
  fs::path cfg = scratch("run.ini");
  {
    std::ofstream f(cfg);
    f << "family=kink-a\nr=0.03125\neta=0.5\ntol=1e-30\n";
  }
  CHECK(run({"periods", "--config", cfg.string()}).code == 1);
  Run r = run({"periods", "--config", cfg.string(), "--tol", "1e-8", "--eta", "0.3"});
  CHECK(r.code == 0);
  auto j = sgk::json::parse(r.out);
  CHECK(j["tol"].get<double>() == 1e-8);
  CHECK(j["spectrum"]["params"]["eta"].get<double>() == 0.3);
  fs::path bad = scratch("bad.ini");
  {
    std::ofstream f(bad);
    f << "nonsense=1\n";
  }
  CHECK(run({"periods", "--config", bad.string()}).code == 2);
}

TEST_CASE("floquet-scan") {
  Run a = run({"floquet-scan", "--potential", "odd", "--amplitude", "0.2", "--nre", "4"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("Re_E,Im_E,Re_Delta,Im_Delta,defect\n", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 5);
  CHECK(run({"floquet-scan", "--potential", "odd", "--amplitude", "0.2", "--nre", "4"}).out == a.out);
  CHECK(run({"floquet-scan", "--re0", "-0.1", "--re1", "0.1", "--nre", "3"}).code == 2);
  CHECK(run({"floquet-scan", "--nre", "0"}).code == 2);
  Run j = run({"floquet-scan", "--potential", "sc", "--k", "0.6", "--nre", "2", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(sgk::json::parse(j.out)["M"] == 2);
}

TEST_CASE("verify with a filter") {
  Run a = run({"verify", "--filter", "elliptic,characteristic", "--seed", "3"});
  CHECK(a.code == 0);
  auto j = sgk::json::parse(a.out);
  CHECK(j["suites"].size() == 2);
  CHECK(j["seed"] == 3);
  CHECK(run({"verify", "--filter", "elliptic,characteristic", "--seed", "3"}).out == a.out);
}
