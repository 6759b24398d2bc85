#include "sgk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "sgk/elliptic.hpp"
#include "sgk/errors.hpp"
#include "sgk/floquet.hpp"
#include "sgk/symplectic.hpp"

namespace sgk {

namespace {

using Rng = std::mt19937_64;

std::string fmt(double v) { return format_double(v); }

struct SuiteBuilder {
  Suite& s;
  const VerifyOptions& opt;

  void add(std::string name, double value, double tol, std::string detail = {}, bool gating = true) {
    if (opt.tol) tol = *opt.tol;
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.tol = tol;
    c.pass = std::isfinite(value) && value < tol;
    c.gating = gating;
    c.detail = std::move(detail);
    s.checks.push_back(std::move(c));
  }
  // Exact (integer) statements; tolerance overrides do not apply.
  void exact(std::string name, bool ok, std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.value = ok ? 0.0 : 1.0;
    c.tol = 0.5;
    c.pass = ok;
    c.detail = std::move(detail);
    s.checks.push_back(std::move(c));
  }
};

double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

// ---- 1: quarter-period, reciprocal-modulus and reciprocal-K identities
void suite_elliptic(SuiteBuilder& b, Rng& g) {
  const int n = 10000;
  double shift = 0, recip = 0, half = 0, kmax = 0;
  for (int i = 0; i < n; ++i) {
    double k = uniform(g, 0.05, 0.95);
    cplx u(uniform(g, -3.0, 3.0), uniform(g, -1.0, 1.0));
    IdentityReport r = elliptic_identities(u, k);
    shift = std::max({shift, r.dn_shift, r.cn_shift});
    recip = std::max({recip, r.recip_dn, r.recip_cn, r.recip_sc});
    half = std::max(half, r.half_shift);
    ReciprocalKReport q = reciprocal_K(k);
    kmax = std::max({kmax, q.k, q.kprime});
  }
  std::string d = std::to_string(n) + " samples, k in (0.05, 0.95)";
  b.add("dn, cn shifted by K + iK'", shift, 1e-10, d);
  b.add("reciprocal modulus dn, cn, sc", recip, 1e-10, d);
  b.add("cn(u + K) = -k' sd u", half, 1e-10, d);
  b.add("K(1/k), K'(1/k) from K(k), K'(k)", kmax, 1e-10, d);
}

double max_relation(const std::vector<Relation>& rel, std::string* worst = nullptr) {
  double m = 0.0;
  for (const Relation& r : rel)
    if (!(r.residual <= m)) {
      m = r.residual;
      if (worst) *worst = r.name;
    }
  return m;
}

const std::vector<std::string> kCaseARelations = {"I(a1) = 16 J(a2)", "I(a2) = 16 J(a1)",
                                                  "I(b1) = 16 J(b2)", "I(b2) = 16 J(b1)"};
const std::vector<std::string> kCaseBRelations = {"I(a2) = -16 J(a2)", "I(a1 + a2) = 16 J(a1 + a2)",
                                                  "I(b1) = 16 J(b1)", "I(b2 - b1) = -16 J(b2 - b1)"};

double named(const std::vector<Relation>& rel, const std::vector<std::string>& names) {
  double m = 0.0;
  int found = 0;
  for (const Relation& r : rel)
    if (std::find(names.begin(), names.end(), r.name) != names.end()) {
      m = std::max(m, r.residual);
      ++found;
    }
  if (found != static_cast<int>(names.size())) return INFINITY;
  return m;
}

// ---- 2: period relations on random kink spectra
void suite_periods(SuiteBuilder& b, Rng& g) {
  for (int i = 0; i < 5; ++i) {
    double eta = uniform(g, 0.1, 1.0);
    double r = uniform(g, 0.2, 0.9) * std::exp(-eta) / 16.0;
    Spectrum s = make_case_a_kink(r, eta);
    std::vector<Relation> rel = period_relations(s, compute_w(s));
    std::string d = "r=" + fmt(r) + " eta=" + fmt(eta);
    b.add("case-a kink a/b loop relations", named(rel, kCaseARelations), 1e-8, d);
    std::string worst;
    double all = max_relation(rel, &worst);
    b.add("case-a kink all period checks", all, 1e-8, d + " worst: " + worst);
  }
  for (int i = 0; i < 5; ++i) {
    double eta2 = uniform(g, 0.1, 0.8);
    double eta1 = eta2 + uniform(g, 0.2, 1.2);
    Spectrum s = make_case_b_kink(eta1, eta2);
    std::vector<Relation> rel = period_relations(s, compute_w(s));
    std::string d = "eta1=" + fmt(eta1) + " eta2=" + fmt(eta2);
    b.add("case-b kink a/b loop relations", named(rel, kCaseBRelations), 1e-8, d);
    std::string worst;
    double all = max_relation(rel, &worst);
    b.add("case-b kink all period checks", all, 1e-8, d + " worst: " + worst);
  }
}

// ---- 3: Landen link between the two cases
void suite_landen(SuiteBuilder& b, Rng& g) {
  const SymplecticConstants& k = constants();
  Mat4i J = standard_J();
  Mat4i sc = k.sigma_c.matrix();
  b.exact("sigma_b = sigma_a sigma_c", compose(k.sigma_a, k.sigma_c) == k.sigma_b);
  b.exact("det sigma_c = 4", k.sigma_c.block_det() == 4, "det = " + std::to_string(k.sigma_c.block_det()));
  b.exact("sigma_c J sigma_c^T = 2J", (sc * J * sc.transpose() - 2 * J).cwiseAbs().maxCoeff() == 0);
  b.exact("sigma_a symplectic", k.sigma_a.symplectic_defect().cwiseAbs().maxCoeff() == 0);

  for (int i = 0; i < 3; ++i) {
    double eta2 = uniform(g, 0.1, 0.8);
    double eta1 = eta2 + uniform(g, 0.2, 1.2);
    Spectrum sb = make_case_b_kink(eta1, eta2);
    SpectrumParams pa = matched_case_a(eta1, eta2);
    Spectrum sa = make_case_a_kink(pa.r, pa.eta);
    std::string d = "eta1=" + fmt(eta1) + " eta2=" + fmt(eta2);
    b.add("matched spectra share branch points", spectrum_distance(sa, sb), 1e-12, d);
    CyclePeriods qa = compute_w(sa), qb = compute_w(sb);
    Mat2c Ba = qa.B_cycles;
    ActResult r = act(k.sigma_c, qb.primed.B);
    b.add("sigma_c . B_b = B_a", (r.B - Ba).cwiseAbs().maxCoeff(), 1e-8, d);
    DiagonalForm fa = diagonalized_form(act(k.sigma_a, Ba).B);
    b.add("sigma_a . B_a has integer off-diagonal after doubling", fa.off_diagonal_defect, 1e-8, d, false);
  }
}

std::vector<Spectrum> reference_spectra() {
  return {make_case_a_breather(1.0 / 32, kPi / 2), make_case_a_kink(1.0 / 32, 0.5),
          make_case_b_kink(1.0, 0.4), make_case_b_breather(1.0, 2.0)};
}

// ---- 4: theta factorization and conjugation
void suite_theta(SuiteBuilder& b, Rng& g) {
  for (const Spectrum& s : reference_spectra()) {
    SolutionModel m = make_model(s, kExactC);
    std::string fam(family_name(s.family));
    double fact = 0.0, conj = 0.0;
    for (int i = 0; i < 100; ++i) {
      double x = uniform(g, -5.0, 5.0), t = uniform(g, -5.0, 5.0);
      fact = std::max(fact, theta_factorization(x, t, m).residual);
      conj = std::max(conj, conjugation_residual(x, t, m.theta));
    }
    b.add(fam + ": genus-2 theta = genus-1 products", fact, 1e-10, "100 points in [-5,5]^2");
    b.add(fam + ": Theta(l + 1/2) = conj Theta(l)", conj, 1e-10, "100 points in [-5,5]^2");
    double agree = 0.0;
    for (int i = 0; i < 10; ++i) {
      double x = uniform(g, -3.0, 3.0), t = uniform(g, -3.0, 3.0);
      agree = std::max(agree, std::abs(eval(x, t, m) - eval_theta_representation(x, t, m.theta).u));
    }
    b.add(fam + ": closed form = theta representation", agree, 1e-8, "10 points in [-3,3]^2", false);
  }
}

// ---- 5: PDE residual with calibrated C
void suite_pde(SuiteBuilder& b, Rng&) {
  for (const Spectrum& s : reference_spectra()) {
    std::string fam(family_name(s.family));
    CyclePeriods p = compute_w(s);
    CalibrationResult c = calibrate_C(s, p);
    SolutionModel m = make_model(s, p, c.C);
    FieldGrid grid = eval_grid(m, -1.0, 1.0, 101, -1.0, 1.0, 101);
    ResidualReport r = pde_residual(grid);
    b.add(fam + ": max |u_tt - u_xx + sin u|", r.max, 1e-4,
          "C*=" + fmt(c.C) + ", 101x101 grid on [-1,1]^2, h=0.02");
  }
}

// ---- 6: static limits and reciprocal chains
void suite_static(SuiteBuilder& b, Rng& g) {
  const double d = 1e-6;
  struct Limit {
    std::string name;
    Spectrum s;
    StaticKind kind;
  };
  double eta = 0.5;
  std::vector<Limit> limits = {
      {"kink-a, r e^eta = (1 - 1e-6)/16", make_case_a_kink(std::exp(-eta) / 16 * (1 - d), eta), StaticKind::Kink},
      {"kink-b, eta2 = 1e-6", make_case_b_kink(1.0, d), StaticKind::Kink},
      {"breather-b, phi2 = pi - 1e-6", make_case_b_breather(1.0, kPi - d), StaticKind::BreatherB}};
  for (const Limit& l : limits) {
    SolutionModel m = make_model(l.s, reduced_cycle_periods(l.s), kExactC);
    double ks = m.mx.kp;
    double diff = 0.0, var = 0.0;
    for (int i = 0; i < 20; ++i) {
      double x = uniform(g, -2.0, 2.0);
      double st = eval_static(l.kind, ks, x);
      double u0 = eval(x, 0.0, m);
      diff = std::max(diff, std::abs(u0 - st));
      for (double t : {0.5, 1.0, 2.0}) var = std::max(var, std::abs(eval(x, t, m) - u0));
    }
    b.add("static profile from " + l.name, diff, 1e-4, "k=" + fmt(ks));
    b.add("time variation at " + l.name, var, 1e-4, "k=" + fmt(ks));
  }
  double kink = 0.0, breather = 0.0;
  int skipped = 0;
  for (int i = 0; i < 200; ++i) {
    double k = uniform(g, 0.1, 0.9), x = uniform(g, -2.0, 2.0);
    breather = std::max(breather, static_breather_chain(k, x).spread());
    try {
      kink = std::max(kink, static_kink_chain(k, x).spread());
    } catch (const PoleError&) {
      ++skipped;
    }
  }
  b.add("static kink under k -> 1/k", kink, 1e-10,
        "200 points, k in (0.1,0.9), x in (-2,2), " + std::to_string(skipped) + " on a pole of sc");
  b.add("static breathers under k -> 1/k", breather, 1e-10, "200 points, k in (0.1,0.9), x in (-2,2)");
}

// ---- 7: quarter-period time shift between matched kinks
void suite_timeshift(SuiteBuilder& b, Rng& g) {
  for (int i = 0; i < 3; ++i) {
    double eta2 = uniform(g, 0.1, 0.8);
    double eta1 = eta2 + uniform(g, 0.2, 1.2);
    SpectrumParams pa = matched_case_a(eta1, eta2);
    SolutionModel a = make_model(make_case_a_kink(pa.r, pa.eta), kExactC);
    SolutionModel bm = make_model(make_case_b_kink(eta1, eta2), kExactC);
    TimeShiftReport r = time_shift_equivalence(a, bm);
    b.add("kink-a(x, t) = kink-b(x, t + shift)", r.max_diff, 1e-6,
          "eta1=" + fmt(eta1) + " eta2=" + fmt(eta2) + " shift=" + fmt(r.shift));
  }
}

// ---- 8: Floquet discriminant
void suite_floquet(SuiteBuilder& b, Rng&) {
  const double L = 2.0;
  std::vector<cplx> E = default_energy_samples(20);
  PeriodicPotential even = even_test_potential(0.3, L), odd = odd_test_potential(0.3, L);
  SymmetryReport re = verify_spectral_symmetry(even, E);
  SymmetryReport ro = verify_spectral_symmetry(odd, E);
  b.add("even potential (M=0): Delta(1/(256E)) = Delta(E)", re.max_defect, 1e-6, "20 samples");
  b.add("odd potential (M=1): Delta(1/(256E)) = -Delta(E)", ro.max_defect, 1e-6, "20 samples");
  PeriodicPotential free = free_potential(L);
  double fd = 0.0, det = std::max(re.max_det_defect, ro.max_det_defect);
  std::vector<cplx> spots = E;
  spots.push_back(0.01);
  spots.push_back(0.04);
  for (cplx e : spots) {
    FloquetResult r = transfer_matrix(free, e);
    fd = std::max(fd, std::abs(r.delta - free_delta(L, e)));
    det = std::max(det, std::abs(r.det - 1.0));
  }
  b.add("free Delta = 2 cos(L (sqrt E - 1/(16 sqrt E)))", fd, 1e-8, "22 samples");
  b.add("det T = 1", det, 1e-8, "all integrations above");

  FloquetOptions gauge;
  gauge.form = LaxForm::Gauge;
  double gd = 0.0, rho = 0.0;
  for (std::size_t i = 0; i < E.size(); i += 4)
    for (const PeriodicPotential* p : {&even, &odd}) {
      FloquetResult a = transfer_matrix(*p, E[i]), c = transfer_matrix(*p, E[i], gauge);
      gd = std::max(gd, std::abs(a.delta - c.delta));
      rho = std::max(rho, std::abs(a.rho_pm[0] * a.rho_pm[1] - 1.0));
    }
  b.add("gauge form gives the same Delta", gd, 1e-8, "10 integrations", false);
  b.add("rho+ rho- = 1", rho, 1e-8, "10 integrations", false);

  Modulus km = Modulus::from_k(0.5);
  std::vector<cplx> E10 = default_energy_samples(10);
  ImaginaryShiftReport is = imaginary_shift_check(0.5, 0.7, kI * complete_Kp(km), E10);
  b.add("centre iK': symmetry defect", is.symmetry.max_defect, 1e-5, "k=0.5, c=0.7, 10 samples", false);
  b.add("i sc(x + iK') = nd(x)", is.identity_residual, 1e-10, "x=0.3, k=0.5", false);
  b.add("i sc(x + iK') = -nd(x)", is.negated_residual, 1e-10, "x=0.3, k=0.5", false);
  ImaginaryShiftReport i0 = imaginary_shift_check(0.5, 0.7, 0.0, E10);
  b.add("centre 0 (sc potential, M=2): symmetry defect", i0.symmetry.max_defect, 1e-5, "k=0.5, c=0.7", false);
}

// ---- 9: characteristic shift for half-integer characteristics
void suite_characteristic(SuiteBuilder& b, Rng& g) {
  double worst = 0.0;
  int count = 0;
  for (int i = 0; i < 20; ++i) {
    cplx B11(uniform(g, -1.0, 1.0), uniform(g, 0.3, 2.0));
    cplx B22(uniform(g, -1.0, 1.0), uniform(g, 0.3, 2.0));
    Vec2c l(cplx(uniform(g, -1, 1), uniform(g, -0.5, 0.5)), cplx(uniform(g, -1, 1), uniform(g, -0.5, 0.5)));
    for (int mask = 0; mask < 16; ++mask) {
      Vec2d a(0.5 * (mask & 1), 0.5 * ((mask >> 1) & 1));
      Vec2d be(0.5 * ((mask >> 2) & 1), 0.5 * ((mask >> 3) & 1));
      worst = std::max(worst, characteristic_shift(a, be, l, B11, B22).residual);
      ++count;
    }
  }
  b.add("diagonal vs unit off-diagonal Riemann matrix", worst, 1e-10,
        std::to_string(count) + " evaluations, 16 characteristics");
}

struct SuiteDef {
  int number;
  const char* id;
  const char* title;
  double time_limit;
  void (*run)(SuiteBuilder&, Rng&);
};

const SuiteDef kSuites[] = {
    {1, "elliptic", "elliptic identities", 10.0, suite_elliptic},
    {2, "periods", "period relations", 60.0, suite_periods},
    {3, "landen", "Landen link", 0.0, suite_landen},
    {4, "theta", "theta factorization", 0.0, suite_theta},
    {5, "pde", "PDE residual", 240.0, suite_pde},
    {6, "static", "static limits", 0.0, suite_static},
    {7, "timeshift", "time-shift unification", 0.0, suite_timeshift},
    {8, "floquet", "Floquet symmetry", 0.0, suite_floquet},
    {9, "characteristic", "characteristic identity", 0.0, suite_characteristic},
};

}  // namespace

bool Suite::pass() const {
  if (!error.empty()) return false;
  for (const Check& c : checks)
    if (c.gating && !c.pass) return false;
  return !checks.empty();
}

bool VerifyReport::pass() const {
  for (const Suite& s : suites)
    if (!s.pass()) return false;
  return !suites.empty();
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const SuiteDef& d : kSuites) v.push_back(d.id);
    return v;
  }();
  return ids;
}

Suite run_suite(const std::string& id, const VerifyOptions& opt) {
  for (const SuiteDef& d : kSuites) {
    if (id != d.id) continue;
    Suite s;
    s.number = d.number;
    s.id = d.id;
    s.title = d.title;
    s.time_limit = d.time_limit;
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(d.number)};
    Rng g(seq);
    SuiteBuilder b{s, opt};
    auto start = std::chrono::steady_clock::now();
    try {
      d.run(b, g);
    } catch (const Error& e) {
      s.error = e.what();
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
  }
  fail(Errc::InvalidConfig, "unknown suite '" + id + "'");
}

VerifyReport run_verify(const VerifyOptions& opt) {
  for (const std::string& f : opt.filter)
    if (std::find(suite_ids().begin(), suite_ids().end(), f) == suite_ids().end())
      fail(Errc::InvalidConfig, "unknown suite '" + f + "'");
  VerifyReport r;
  r.seed = opt.seed;
  for (const std::string& id : suite_ids()) {
    if (!opt.filter.empty() && std::find(opt.filter.begin(), opt.filter.end(), id) == opt.filter.end())
      continue;
    r.suites.push_back(run_suite(id, opt));
  }
  return r;
}

json to_json(const VerifyReport& r) {
  json j;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  json suites = json::array();
  for (const Suite& s : r.suites) {
    json js;
    js["number"] = s.number;
    js["id"] = s.id;
    js["title"] = s.title;
    js["pass"] = s.pass();
    if (!s.error.empty()) js["error"] = s.error;
    json checks = json::array();
    for (const Check& c : s.checks) {
      json jc;
      jc["name"] = c.name;
      jc["value"] = std::isfinite(c.value) ? json(c.value) : json(nullptr);
      jc["tol"] = c.tol;
      jc["pass"] = c.pass;
      if (!c.gating) jc["informational"] = true;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    js["checks"] = checks;
    suites.push_back(js);
  }
  j["suites"] = suites;
  return j;
}

}  // namespace sgk
