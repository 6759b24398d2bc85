#include "sgk/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "sgk/errors.hpp"

namespace sgk {

namespace {

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

json to_json(cplx z) { return json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

json to_json(const Mat2c& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) rows.push_back(json::array({to_json(m(i, 0)), to_json(m(i, 1))}));
  return rows;
}

json to_json(const Spectrum& s) {
  json j;
  j["family"] = std::string(family_name(s.family));
  const SpectrumParams& p = s.params;
  json params;
  switch (s.family) {
    case Family::BreatherA: params = {{"r", p.r}, {"phi", p.phi}}; break;
    case Family::KinkA: params = {{"r", p.r}, {"eta", p.eta}}; break;
    case Family::KinkB: params = {{"eta1", p.eta1}, {"eta2", p.eta2}}; break;
    case Family::BreatherB: params = {{"phi1", p.phi1}, {"phi2", p.phi2}}; break;
  }
  j["params"] = params;
  json pts = json::array();
  for (cplx e : s.E) pts.push_back(to_json(e));
  j["branch_points"] = pts;
  j["symmetry_defect"] = num(symmetry_defect(s));
  return j;
}

json to_json(const CyclePeriods& p) {
  json j;
  j["source"] = p.from_quadrature ? "quadrature" : "reduced";
  j["w_plus"] = to_json(p.w_plus);
  j["w_minus"] = to_json(p.w_minus);
  j["w_plus_prime"] = to_json(p.w_plus_prime);
  j["w_minus_prime"] = to_json(p.w_minus_prime);
  j["tau_plus"] = to_json(p.tau_plus);
  j["tau_minus"] = to_json(p.tau_minus);
  if (p.from_quadrature) {
    const CycleIntegrals& c = p.cycles;
    j["cycles"] = {{"I_a1", to_json(c.I_a1)}, {"I_a2", to_json(c.I_a2)},
                   {"I_b1", to_json(c.I_b1)}, {"I_b2", to_json(c.I_b2)},
                   {"J_a1", to_json(c.J_a1)}, {"J_a2", to_json(c.J_a2)},
                   {"J_b1", to_json(c.J_b1)}, {"J_b2", to_json(c.J_b2)}};
    j["w_det"] = to_json(p.w_det);
    j["B_cycles"] = to_json(p.B_cycles);
    if (case_of(p.family) == Case::B) j["B_primed"] = to_json(p.primed.B);
  }
  return j;
}

json to_json(const std::vector<Relation>& rel) {
  json arr = json::array();
  for (const Relation& r : rel)
    arr.push_back({{"name", r.name}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"residual", num(r.residual)}});
  return arr;
}

json to_json(const SolutionModel& m) {
  json j;
  j["family"] = std::string(family_name(m.family));
  j["C"] = num(m.C);
  j["prefactor"] = num(m.prefactor);
  j["alpha"] = num(m.alpha);
  j["beta"] = num(m.beta);
  j["k_x"] = {{"k", num(m.mx.k)}, {"kp", num(m.mx.kp)}};
  j["k_t"] = {{"k", num(m.mt.k)}, {"kp", num(m.mt.kp)}};
  j["B"] = to_json(m.theta.B);
  return j;
}

json to_json(const ResidualReport& r) {
  return json{{"max", num(r.max)}, {"l2", num(r.l2)}, {"x_at_max", num(r.x_at_max)},
              {"t_at_max", num(r.t_at_max)}, {"points", r.points}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string grid_csv(const FieldGrid& g) {
  std::string out = "x,t,u\n";
  out.reserve(out.size() + static_cast<std::size_t>(g.nx) * g.nt * 72);
  for (int it = 0; it < g.nt; ++it)
    for (int ix = 0; ix < g.nx; ++ix) {
      out += format_double(g.x(ix));
      out += ',';
      out += format_double(g.t(it));
      out += ',';
      out += format_double(g.at(ix, it));
      out += '\n';
    }
  return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "Re_E,Im_E,Re_Delta,Im_Delta,defect\n";
  for (const ScanRow& r : rows) {
    out += format_double(r.E.real()) + ',' + format_double(r.E.imag()) + ',' +
           format_double(r.delta.real()) + ',' + format_double(r.delta.imag()) + ',' +
           format_double(r.defect) + '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(Errc::InvalidConfig, "cannot open output file " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) fail(Errc::InvalidConfig, "failed writing " + path);
}

}  // namespace sgk
