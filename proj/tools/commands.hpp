#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace sgk::cli {

struct Output {
  std::string path;  // "-" = stdout
  std::string content;
};

struct CommandResult {
  int exit_code = 0;
  std::vector<Output> outputs;
};

// Throws sgk::Error on invalid input or numerical failure.
CommandResult run_command(const RunConfig& c);

// Exit codes: 0 ok, 1 numerical failure or failed checks, 2 invalid input.
// Errors go to err as one JSON object.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgk::cli
