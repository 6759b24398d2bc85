#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgk/io.hpp"

namespace sgk {

struct Check {
  std::string name;
  double value = 0.0;  // residual or defect
  double tol = 0.0;
  bool pass = false;
  bool gating = true;  // informational checks do not decide the suite
  std::string detail;
};

struct Suite {
  int number = 0;
  std::string id;
  std::string title;
  std::vector<Check> checks;
  std::string error;        // set when the suite threw
  double seconds = 0.0;     // wall time, not serialized
  double time_limit = 0.0;  // seconds; 0 = none
  bool pass() const;
  bool within_time() const { return time_limit <= 0.0 || seconds < time_limit; }
};

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  std::vector<std::string> filter;  // suite ids; empty = all
  std::optional<double> tol;        // overrides every check tolerance
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<Suite> suites;
  bool pass() const;
};

// elliptic, periods, landen, theta, pde, static, timeshift, floquet, characteristic
const std::vector<std::string>& suite_ids();

Suite run_suite(const std::string& id, const VerifyOptions& opt);
VerifyReport run_verify(const VerifyOptions& opt);

json to_json(const VerifyReport& r);

}  // namespace sgk
