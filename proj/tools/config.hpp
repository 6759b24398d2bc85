#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgk::cli {

struct RunConfig {
  std::string command;  // eval | periods | verify | floquet-scan

  // spectrum selection
  std::string family;  // breather-a | kink-a | kink-b | breather-b
  std::string case_tag;  // a | b
  std::string kind;      // kink | breather
  std::optional<double> r, phi, eta, eta1, eta2, phi1, phi2;

  // eval
  std::string grid = "101x101";
  double x0 = -5.0, x1 = 5.0, t0 = -5.0, t1 = 5.0;
  std::string C = "64";  // number or "calibrate"
  std::string repr = "closed";  // closed | theta

  // floquet-scan
  std::string potential = "even";  // free | even | odd | sc | shifted-sc
  double L = 2.0;
  double amplitude = 0.3;
  double k = 0.5;
  double re0 = 0.01, re1 = 0.4, im0 = 0.0, im1 = 0.0;
  int nre = 40, nim = 1;

  // common
  std::string out = "-";
  std::string format;  // csv | json; empty = command default
  std::optional<double> tol;
  std::uint64_t seed = 20240917;
  std::vector<std::string> filter;
};

struct ParseResult {
  RunConfig config;
  bool done = false;  // help or a parse error was handled
  int exit_code = 0;
  std::string message;
};

// Flags override the --config file (key=value lines), which overrides defaults.
ParseResult parse_args(int argc, const char* const* argv);

}  // namespace sgk::cli
