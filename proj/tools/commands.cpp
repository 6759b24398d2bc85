#include "commands.hpp"

#include <charconv>
#include <cmath>

#include "sgk/errors.hpp"
#include "sgk/floquet.hpp"
#include "sgk/io.hpp"
#include "sgk/verify.hpp"

namespace sgk::cli {

namespace {

Family resolve_family(const RunConfig& c) {
  if (!c.family.empty()) {
    Family f = parse_family(c.family);
    if ((!c.case_tag.empty() && (c.case_tag == "a") != (case_of(f) == Case::A)) ||
        (!c.kind.empty() && (c.kind == "kink") != (kind_of(f) == Kind::Kink)))
      fail(Errc::InvalidConfig, "--family " + c.family + " disagrees with --case/--kind");
    return f;
  }
  if (c.case_tag.empty() || c.kind.empty()) fail(Errc::InvalidConfig, "need --family, or --case and --kind");
  return family_of(c.case_tag == "a" ? Case::A : Case::B, c.kind == "kink" ? Kind::Kink : Kind::Breather);
}

double need(const std::optional<double>& v, const char* name, Family f) {
  if (!v) fail(Errc::InvalidConfig, std::string("missing --") + name + " for " + std::string(family_name(f)));
  return *v;
}

Spectrum build_spectrum(const RunConfig& c) {
  Family f = resolve_family(c);
  switch (f) {
    case Family::BreatherA: return make_case_a_breather(need(c.r, "r", f), need(c.phi, "phi", f));
    case Family::KinkA: return make_case_a_kink(need(c.r, "r", f), need(c.eta, "eta", f));
    case Family::KinkB: return make_case_b_kink(need(c.eta1, "eta1", f), need(c.eta2, "eta2", f));
    case Family::BreatherB: return make_case_b_breather(need(c.phi1, "phi1", f), need(c.phi2, "phi2", f));
  }
  fail(Errc::InvalidConfig, "unknown family");
}

std::string format_of(const RunConfig& c, const char* fallback) { return c.format.empty() ? fallback : c.format; }

void parse_grid(const std::string& g, int& nx, int& nt) {
  auto pos = g.find('x');
  auto num = [&](std::string_view s, int& v) {
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    return r.ec == std::errc() && r.ptr == s.data() + s.size();
  };
  std::string_view sv(g);
  if (pos == std::string::npos || !num(sv.substr(0, pos), nx) || !num(sv.substr(pos + 1), nt))
    fail(Errc::InvalidConfig, "--grid must look like 101x101");
  if (nx < 1 || nt < 1 || nx > 10001 || nt > 10001)
    fail(Errc::ParamOutOfRange, "grid sizes must lie in [1, 10001]");
}

void check_range(double a, double b, int n, const char* name) {
  if (!std::isfinite(a) || !std::isfinite(b) || (n > 1 && !(b > a)))
    fail(Errc::ParamOutOfRange, std::string(name) + " range must be finite and increasing");
}

CommandResult cmd_eval(const RunConfig& c) {
  int nx = 0, nt = 0;
  parse_grid(c.grid, nx, nt);
  check_range(c.x0, c.x1, nx, "x");
  check_range(c.t0, c.t1, nt, "t");
  bool calibrate = c.C == "calibrate";
  double C = 0.0;
  if (!calibrate) {
    auto r = std::from_chars(c.C.data(), c.C.data() + c.C.size(), C);
    if (r.ec != std::errc() || r.ptr != c.C.data() + c.C.size())
      fail(Errc::InvalidConfig, "--C must be a number or 'calibrate'");
    if (!(C > 0.0) || !std::isfinite(C)) fail(Errc::ParamOutOfRange, "--C must be positive");
  }
  Spectrum s = build_spectrum(c);
  CyclePeriods p = compute_w(s);

  json meta;
  meta["command"] = "eval";
  meta["spectrum"] = to_json(s);
  if (calibrate) {
    CalibrationResult cal = calibrate_C(s, p);
    C = cal.C;
    meta["calibration"] = {{"C", cal.C}, {"residual", cal.residual}, {"evaluations", cal.evaluations}};
  }
  SolutionModel m = make_model(s, p, C);
  meta["model"] = to_json(m);
  meta["representation"] = c.repr;
  meta["grid"] = {{"nx", nx}, {"nt", nt}, {"x0", c.x0}, {"x1", c.x1}, {"t0", c.t0}, {"t1", c.t1}};

  FieldGrid g = c.repr == "theta" ? eval_theta_grid(m.theta, c.x0, c.x1, nx, c.t0, c.t1, nt)
                                  : eval_grid(m, c.x0, c.x1, nx, c.t0, c.t1, nt);
  try {
    meta["pde_residual"] = to_json(pde_residual(g));
  } catch (const Error& e) {
    if (e.code() != Errc::GridTooCoarse) throw;
    meta["pde_residual"] = nullptr;
  }

  CommandResult res;
  if (format_of(c, "csv") == "csv") {
    res.outputs.push_back({c.out, grid_csv(g)});
    if (c.out != "-") res.outputs.push_back({c.out + ".json", dump(meta)});
  } else {
    json u = json::array();
    for (int it = 0; it < g.nt; ++it) {
      json row = json::array();
      for (int ix = 0; ix < g.nx; ++ix) row.push_back(g.at(ix, it));
      u.push_back(row);
    }
    meta["u"] = u;
    res.outputs.push_back({c.out, dump(meta)});
  }
  return res;
}

CommandResult cmd_periods(const RunConfig& c) {
  double tol = c.tol.value_or(1e-8);
  Spectrum s = build_spectrum(c);
  CyclePeriods p = compute_w(s);
  std::vector<Relation> rel = period_relations(s, p);
  bool pass = true;
  for (const Relation& r : rel) pass = pass && r.residual < tol;

  CommandResult res;
  res.exit_code = pass ? 0 : 1;
  if (format_of(c, "json") == "json") {
    json j;
    j["command"] = "periods";
    j["spectrum"] = to_json(s);
    j["periods"] = to_json(p);
    j["relations"] = to_json(rel);
    j["tol"] = tol;
    j["pass"] = pass;
    res.outputs.push_back({c.out, dump(j)});
  } else {
    std::string csv = "name,residual,pass\n";
    for (const Relation& r : rel)
      csv += "\"" + r.name + "\"," + format_double(r.residual) + ',' + (r.residual < tol ? "true" : "false") + '\n';
    res.outputs.push_back({c.out, csv});
  }
  return res;
}

CommandResult cmd_verify(const RunConfig& c) {
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.filter = c.filter;
  opt.tol = c.tol;
  VerifyReport r = run_verify(opt);
  CommandResult res;
  res.exit_code = r.pass() ? 0 : 1;
  if (format_of(c, "json") == "json") {
    res.outputs.push_back({c.out, dump(to_json(r))});
  } else {
    std::string csv = "suite,check,value,tol,pass,informational\n";
    for (const Suite& s : r.suites) {
      if (!s.error.empty()) csv += s.id + ",\"error: " + s.error + "\",nan,0,false,false\n";
      for (const Check& ch : s.checks)
        csv += s.id + ",\"" + ch.name + "\"," + format_double(ch.value) + ',' + format_double(ch.tol) + ',' +
               (ch.pass ? "true" : "false") + ',' + (ch.gating ? "false" : "true") + '\n';
    }
    res.outputs.push_back({c.out, csv});
  }
  return res;
}

PeriodicPotential build_potential(const RunConfig& c) {
  if (c.potential == "free") return free_potential(c.L);
  if (c.potential == "even") return even_test_potential(c.amplitude, c.L);
  if (c.potential == "odd") return odd_test_potential(c.amplitude, c.L);
  if (!(c.k > 0.0 && c.k < 1.0)) fail(Errc::ParamOutOfRange, "--k must lie in (0, 1)");
  Modulus m = Modulus::from_k(c.k);
  cplx x0 = c.potential == "sc" ? cplx(0.0) : kI * complete_Kp(m);
  return elliptic_potential(c.k, c.amplitude, x0);
}

CommandResult cmd_floquet_scan(const RunConfig& c) {
  if (c.nre < 1 || c.nim < 1) fail(Errc::ParamOutOfRange, "empty E-grid");
  if (static_cast<long>(c.nre) * c.nim > 1000000) fail(Errc::ParamOutOfRange, "E-grid too large");
  check_range(c.re0, c.re1, c.nre, "Re E");
  check_range(c.im0, c.im1, c.nim, "Im E");
  if (!(c.L > 0.0) || !std::isfinite(c.L)) fail(Errc::ParamOutOfRange, "--L must be positive");
  PeriodicPotential pot = build_potential(c);
  validate(pot);
  double sign = pot.M % 2 == 0 ? 1.0 : -1.0;

  std::vector<ScanRow> rows;
  for (int j = 0; j < c.nim; ++j)
    for (int i = 0; i < c.nre; ++i) {
      double re = c.nre > 1 ? c.re0 + (c.re1 - c.re0) * i / (c.nre - 1) : c.re0;
      double im = c.nim > 1 ? c.im0 + (c.im1 - c.im0) * j / (c.nim - 1) : c.im0;
      if (re == 0.0 && im == 0.0) fail(Errc::ZeroEnergy, "E-grid contains E = 0");
      if (re < 0.0 && im == 0.0) im = 1e-9;  // stay on the upper side of the sqrt cut
      cplx E(re, im);
      FloquetResult a = transfer_matrix(pot, E);
      FloquetResult b = transfer_matrix(pot, dual_energy(E));
      rows.push_back({E, a.delta, std::abs(b.delta - sign * a.delta)});
    }

  CommandResult res;
  if (format_of(c, "csv") == "csv") {
    res.outputs.push_back({c.out, scan_csv(rows)});
  } else {
    json j;
    j["command"] = "floquet-scan";
    j["potential"] = pot.name;
    j["L"] = pot.L;
    j["M"] = pot.M;
    j["parity"] = parity_name(pot.parity);
    json arr = json::array();
    for (const ScanRow& r : rows)
      arr.push_back({{"E", to_json(r.E)}, {"delta", to_json(r.delta)}, {"defect", r.defect}});
    j["rows"] = arr;
    res.outputs.push_back({c.out, dump(j)});
  }
  return res;
}

std::string error_json(std::string_view code, const std::string& message) {
  json j;
  j["error"] = std::string(code);
  j["message"] = message;
  return j.dump() + "\n";
}

}  // namespace

CommandResult run_command(const RunConfig& c) {
  if (c.command == "eval") return cmd_eval(c);
  if (c.command == "periods") return cmd_periods(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "floquet-scan") return cmd_floquet_scan(c);
  fail(Errc::InvalidConfig, "unknown command '" + c.command + "'");
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult p = parse_args(argc, argv);
  if (p.done) {
    if (p.exit_code == 0)
      out << p.message;
    else
      err << error_json(errc_name(Errc::InvalidConfig), p.message);
    return p.exit_code;
  }
  try {
    CommandResult r = run_command(p.config);
    for (const Output& o : r.outputs) {
      if (o.path == "-")
        out << o.content;
      else
        write_file(o.path, o.content);
    }
    out.flush();
    return r.exit_code;
  } catch (const Error& e) {
    err << error_json(errc_name(e.code()), e.message());
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << error_json("InternalError", e.what());
    return 1;
  }
}

}  // namespace sgk::cli
