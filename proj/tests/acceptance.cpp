#include <cstdio>

#include "sgk/io.hpp"
#include "sgk/verify.hpp"

// One line per acceptance criterion; each criterion is one verification suite.
int main() {
  sgk::VerifyOptions opt;
  bool all = true;
  for (const std::string& id : sgk::suite_ids()) {
    sgk::Suite s = sgk::run_suite(id, opt);
    bool ok = s.pass() && s.within_time();
    all = all && ok;
    std::string why;
    if (!s.error.empty()) why = " error: " + s.error;
    for (const sgk::Check& c : s.checks)
      if (c.gating && !c.pass) why += " [" + c.name + " = " + sgk::format_double(c.value) + "]";
    if (!s.within_time()) why += " [time limit " + sgk::format_double(s.time_limit) + " s]";
    std::printf("%s %d %s (%.2f s)%s\n", ok ? "PASS" : "FAIL", s.number, s.title.c_str(), s.seconds, why.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
