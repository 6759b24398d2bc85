#include "config.hpp"

#include <CLI11.hpp>

namespace sgk::cli {

ParseResult parse_args(int argc, const char* const* argv) {
  ParseResult res;
  RunConfig& c = res.config;

  CLI::App app{"Finite-gap sine-Gordon toolkit", "sgkit"};
  app.set_config("--config", "", "key=value file; flags given on the command line take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option("command", c.command, "eval | periods | verify | floquet-scan")
      ->required()
      ->check(CLI::IsMember({"eval", "periods", "verify", "floquet-scan"}));

  app.add_option("--family", c.family, "breather-a | kink-a | kink-b | breather-b")
      ->check(CLI::IsMember({"breather-a", "kink-a", "kink-b", "breather-b"}));
  app.add_option("--case", c.case_tag, "a | b")->check(CLI::IsMember({"a", "b"}));
  app.add_option("--kind", c.kind, "kink | breather")->check(CLI::IsMember({"kink", "breather"}));
  app.add_option("--r", c.r, "Case (a) radius");
  app.add_option("--phi", c.phi, "Case (a) breather angle");
  app.add_option("--eta", c.eta, "Case (a) kink parameter");
  app.add_option("--eta1", c.eta1, "Case (b) kink parameter");
  app.add_option("--eta2", c.eta2, "Case (b) kink parameter");
  app.add_option("--phi1", c.phi1, "Case (b) breather angle");
  app.add_option("--phi2", c.phi2, "Case (b) breather angle");

  app.add_option("--grid", c.grid, "NXxNT")->capture_default_str();
  app.add_option("--x0", c.x0)->capture_default_str();
  app.add_option("--x1", c.x1)->capture_default_str();
  app.add_option("--t0", c.t0)->capture_default_str();
  app.add_option("--t1", c.t1)->capture_default_str();
  app.add_option("--C", c.C, "scaling constant or 'calibrate'")->capture_default_str();
  app.add_option("--repr", c.repr, "closed | theta")
      ->check(CLI::IsMember({"closed", "theta"}))
      ->capture_default_str();

  app.add_option("--potential", c.potential, "free | even | odd | sc | shifted-sc")
      ->check(CLI::IsMember({"free", "even", "odd", "sc", "shifted-sc"}))
      ->capture_default_str();
  app.add_option("--L", c.L, "period of the test potential")->capture_default_str();
  app.add_option("--amplitude", c.amplitude)->capture_default_str();
  app.add_option("--k", c.k, "modulus of the elliptic potentials")->capture_default_str();
  app.add_option("--re0", c.re0)->capture_default_str();
  app.add_option("--re1", c.re1)->capture_default_str();
  app.add_option("--nre", c.nre)->capture_default_str();
  app.add_option("--im0", c.im0)->capture_default_str();
  app.add_option("--im1", c.im1)->capture_default_str();
  app.add_option("--nim", c.nim)->capture_default_str();

  app.add_option("--out", c.out, "output path, '-' for stdout")->capture_default_str();
  app.add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", c.tol, "tolerance override");
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();
  app.add_option("--filter", c.filter, "verify suites to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    res.done = true;
    res.exit_code = e.get_exit_code() == 0 ? 0 : 2;
    res.message = e.get_exit_code() == 0 ? app.help() : e.what();
  }
  return res;
}

}  // namespace sgk::cli
