#include "sgk/floquet.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "sgk/errors.hpp"

namespace sgk {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 8>;

constexpr double kParityTol = 1e-10;
constexpr double kPeriodTol = 1e-10;

double fd_derivative(const std::function<double(double)>& f, double x) {
  const double h = 1e-3;
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

double v_at(const PeriodicPotential& p, double x) { return p.v ? p.v(x) : 0.0; }
double ux_at(const PeriodicPotential& p, double x) { return p.ux ? p.ux(x) : fd_derivative(p.u, x); }

// Coefficient matrix A(x) of Phi' = A Phi.
CMat2 coefficients(const PeriodicPotential& p, double x, cplx sE, LaxForm form) {
  double u = p.u(x);
  double v = v_at(p, x);
  cplx inv = 1.0 / (16.0 * sE);
  CMat2 a;
  if (form == LaxForm::Original) {
    // J phi' + w sigma_x phi + D phi = 0 with J = [[0,-1],[1,0]], so phi' = J M phi.
    cplx w = 0.25 * kI * (v + ux_at(p, x));
    cplx m11 = std::exp(kI * u) * inv - sE;
    cplx m22 = std::exp(-kI * u) * inv - sE;
    a[0] = {-w, -m22};
    a[1] = {m11, w};
  } else {
    // psi = diag(e^{iu/4}, e^{-iu/4}) phi.
    cplx ep = std::exp(0.5 * kI * u), em = std::exp(-0.5 * kI * u);
    cplx iv = 0.25 * kI * v;
    a[0] = {-iv, -(em * inv - sE * ep)};
    a[1] = {ep * inv - sE * em, iv};
  }
  return a;
}

// Columns of Phi packed as (re, im) pairs: Phi00, Phi10, Phi01, Phi11.
cplx get(const State& s, int r, int c) {
  int i = 2 * (2 * c + r);
  return {s[i], s[i + 1]};
}

void put(State& s, int r, int c, cplx z) {
  int i = 2 * (2 * c + r);
  s[i] = z.real();
  s[i + 1] = z.imag();
}

CMat2 fundamental(const PeriodicPotential& p, cplx sE, const FloquetOptions& opt, long& steps) {
  State y{};
  put(y, 0, 0, 1.0);
  put(y, 1, 1, 1.0);
  auto rhs = [&](const State& s, State& ds, double x) {
    CMat2 a = coefficients(p, x, sE, opt.form);
    for (int c = 0; c < 2; ++c)
      for (int r = 0; r < 2; ++r) put(ds, r, c, a[r][0] * get(s, 0, c) + a[r][1] * get(s, 1, c));
  };
  steps = 0;
  auto count = [&](const State&, double) {
    if (++steps > opt.max_steps)
      fail(Errc::IntegratorTolExceeded, "step limit reached in transfer-matrix integration");
  };
  auto stepper = odeint::make_controlled(opt.atol, opt.rtol, odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_adaptive(stepper, rhs, y, 0.0, p.L, p.L / 64, count);
  } catch (const odeint::step_adjustment_error& e) {
    fail(Errc::IntegratorTolExceeded, e.what());
  }
  CMat2 phi;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) phi[r][c] = get(y, r, c);
  return phi;
}

Parity sample_parity(const PeriodicPotential& p) {
  bool even = true, odd = true;
  for (int i = 1; i <= 16; ++i) {
    double x = p.L * (0.0625 * i - 0.03125) * 1.3;
    double a = p.u(x), b = p.u(-x);
    double va = v_at(p, x), vb = v_at(p, -x);
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) > kParityTol * scale || std::abs(va - vb) > kParityTol * scale) even = false;
    if (std::abs(a + b) > kParityTol * scale || std::abs(va + vb) > kParityTol * scale) odd = false;
  }
  if (even && !odd) return Parity::Even;
  if (odd && !even) return Parity::Odd;
  if (even && odd) return Parity::Even;  // u = 0
  return Parity::None;
}

}  // namespace

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::None: break;
  }
  return "none";
}

PotentialCheck check_potential(const PeriodicPotential& pot) {
  if (!pot.u) fail(Errc::InvalidConfig, "potential has no u");
  if (!(pot.L > 0.0) || !std::isfinite(pot.L)) fail(Errc::ParamOutOfRange, "period L must be positive");
  PotentialCheck r;
  for (int i = 0; i < 16; ++i) {
    double x = pot.L * (i / 16.0 - 0.47);
    r.period_defect = std::max(r.period_defect, std::abs(pot.u(x + pot.L) - pot.u(x) - 2 * kPi * pot.M));
    r.v_period_defect = std::max(r.v_period_defect, std::abs(v_at(pot, x + pot.L) - v_at(pot, x)));
  }
  r.charge = static_cast<int>(std::lround((pot.u(pot.L) - pot.u(0.0)) / (2 * kPi)));
  r.sampled_parity = sample_parity(pot);
  return r;
}

void validate(const PeriodicPotential& pot) {
  PotentialCheck c = check_potential(pot);
  double scale = std::max(1.0, 2 * kPi * std::abs(pot.M));
  if (c.period_defect > kPeriodTol * scale)
    fail(Errc::ParamOutOfRange, "u(x+L) != u(x) + 2 pi M for potential " + pot.name);
  if (c.v_period_defect > kPeriodTol * scale)
    fail(Errc::ParamOutOfRange, "v is not L-periodic for potential " + pot.name);
  if (c.charge != pot.M)
    fail(Errc::ParamOutOfRange, "declared charge " + std::to_string(pot.M) + " but u winds " +
                                    std::to_string(c.charge));
}

FloquetResult transfer_matrix(const PeriodicPotential& pot, cplx E, const FloquetOptions& opt) {
  if (!std::isfinite(E.real()) || !std::isfinite(E.imag()))
    fail(Errc::ParamOutOfRange, "energy is not finite");
  if (std::abs(E) == 0.0) fail(Errc::ZeroEnergy, "E = 0");
  if (!pot.u) fail(Errc::InvalidConfig, "potential has no u");
  cplx sE = std::sqrt(E);

  FloquetResult r;
  r.E = E;
  r.M = pot.M;
  CMat2 phi = fundamental(pot, sE, opt, r.steps);
  if (opt.form == LaxForm::Gauge) {
    // phi(L) = G(L)^{-1} psi(L) G(0), G = diag(e^{iu/4}, e^{-iu/4})
    double u0 = pot.u(0.0), uL = pot.u(pot.L);
    cplx g0[2] = {std::exp(0.25 * kI * u0), std::exp(-0.25 * kI * u0)};
    cplx gL[2] = {std::exp(0.25 * kI * uL), std::exp(-0.25 * kI * uL)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) phi[i][j] = phi[i][j] * g0[j] / gL[i];
  }
  // phi_+(L) = t11 e1 + t12 e2, so T is the transpose of the fundamental matrix.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.T[i][j] = phi[j][i];
  r.delta = r.T[0][0] + r.T[1][1];
  r.det = r.T[0][0] * r.T[1][1] - r.T[0][1] * r.T[1][0];
  cplx disc = std::sqrt(r.delta * r.delta - 4.0 * r.det);
  r.rho_pm = {0.5 * (r.delta - disc), 0.5 * (r.delta + disc)};
  return r;
}

cplx free_delta(double L, cplx E) {
  if (std::abs(E) == 0.0) fail(Errc::ZeroEnergy, "E = 0");
  cplx s = std::sqrt(E);
  return 2.0 * std::cos(L * (s - 1.0 / (16.0 * s)));
}

cplx dual_energy(cplx E) {
  if (std::abs(E) == 0.0) fail(Errc::ZeroEnergy, "E = 0");
  return 1.0 / (256.0 * E);
}

SymmetryReport verify_spectral_symmetry(const PeriodicPotential& pot, const std::vector<cplx>& E,
                                        const FloquetOptions& opt) {
  if (pot.parity == Parity::None) fail(Errc::ParityUntagged, "potential " + pot.name + " has no parity tag");
  validate(pot);
  Parity sampled = check_potential(pot).sampled_parity;
  if (sampled != pot.parity)
    fail(Errc::ParityUntagged, std::string("potential tagged ") + parity_name(pot.parity) +
                                   " but samples are " + parity_name(sampled));
  SymmetryReport r;
  r.M = pot.M;
  r.parity = pot.parity;
  double sign = (pot.M % 2 == 0) ? 1.0 : -1.0;
  for (cplx e : E) {
    FloquetResult a = transfer_matrix(pot, e, opt);
    FloquetResult b = transfer_matrix(pot, dual_energy(e), opt);
    r.E.push_back(e);
    r.delta.push_back(a.delta);
    r.delta_dual.push_back(b.delta);
    double d = std::abs(b.delta - sign * a.delta);
    r.defect.push_back(d);
    r.max_defect = std::max(r.max_defect, d);
    r.max_det_defect = std::max({r.max_det_defect, std::abs(a.det - 1.0), std::abs(b.det - 1.0)});
  }
  return r;
}

std::vector<cplx> default_energy_samples(int n) {
  if (n <= 0) fail(Errc::ParamOutOfRange, "need at least one E sample");
  // |E| log-spaced in [0.01, 0.39]; the dual 1/(256 E) covers the same range.
  std::vector<cplx> out;
  out.reserve(n);
  const double golden = 2.399963229728653;
  for (int i = 0; i < n; ++i) {
    double f = n > 1 ? static_cast<double>(i) / (n - 1) : 0.5;
    double r = 0.01 * std::pow(39.0, f);
    double a = std::remainder(golden * (i + 1), 2 * kPi);
    cplx e = std::polar(r, a);
    if (std::abs(e.imag()) < 1e-9 && e.real() < 0) e = cplx(e.real(), 1e-9);
    out.push_back(e);
  }
  return out;
}

PeriodicPotential free_potential(double L) {
  PeriodicPotential p;
  p.name = "free";
  p.u = [](double) { return 0.0; };
  p.ux = [](double) { return 0.0; };
  p.L = L;
  p.M = 0;
  p.parity = Parity::Even;
  return p;
}

PeriodicPotential even_test_potential(double a, double L) {
  PeriodicPotential p;
  p.name = "even";
  double w = 2 * kPi / L;
  p.u = [=](double x) { return 4.0 * std::atan(a * std::cos(w * x)); };
  p.ux = [=](double x) {
    double c = a * std::cos(w * x);
    return -4.0 * a * w * std::sin(w * x) / (1.0 + c * c);
  };
  p.L = L;
  p.M = 0;
  p.parity = Parity::Even;
  return p;
}

PeriodicPotential odd_test_potential(double eps, double L) {
  PeriodicPotential p;
  p.name = "odd";
  double w = 2 * kPi / L;
  p.u = [=](double x) { return w * x + eps * std::sin(w * x); };
  p.ux = [=](double x) { return w + eps * w * std::cos(w * x); };
  p.L = L;
  p.M = 1;
  p.parity = Parity::Odd;
  return p;
}

PeriodicPotential elliptic_potential(double k, double c, cplx x0) {
  if (!(k > 0.0 && k < 1.0)) fail(Errc::ParamOutOfRange, "elliptic potential needs 0 < k < 1");
  if (!(c > 0.0) || !std::isfinite(c)) fail(Errc::ParamOutOfRange, "amplitude c must be positive");
  Modulus m = Modulus::from_k(k);
  double K = complete_K(m).real(), Kp = complete_Kp(m).real();
  PeriodicPotential p;
  p.L = 2 * K;
  if (std::abs(x0) <= 1e-12 * K) {
    p.name = "sc";
    p.u = [=](double x) {
      const auto& n = jacobi(x, m).numerators();
      double th = std::atan2(c * n[0].real(), n[1].real());
      return 4.0 * (th + 2 * kPi * std::round((kPi * x / (2 * K) - th) / (2 * kPi)));
    };
    p.ux = [=](double x) {
      const auto& n = jacobi(x, m).numerators();
      double s = n[0].real(), cn = n[1].real(), d = n[2].real(), den = n[3].real();
      return 4.0 * c * d * den / (cn * cn + c * c * s * s);
    };
    p.M = 2;
    p.parity = Parity::Odd;
    return p;
  }
  if (std::abs(x0 - kI * Kp) <= 1e-12 * Kp) {
    p.name = "shifted-sc";
    p.u = [=](double x) { return 4.0 * std::atan(c * (kI * jacobi(x + kI * Kp, m).sc()).real()); };
    p.M = 0;
    p.parity = Parity::Even;
    return p;
  }
  fail(Errc::AnalyticContinuationUnavailable,
       "only x0 = 0 and x0 = iK' are supported for the elliptic potential");
}

ImaginaryShiftReport imaginary_shift_check(double k, double c, cplx x0, const std::vector<cplx>& E,
                                           const FloquetOptions& opt) {
  PeriodicPotential pot = elliptic_potential(k, c, x0);
  ImaginaryShiftReport r;
  r.k = k;
  r.x = 0.3;
  Modulus m = Modulus::from_k(k);
  double Kp = complete_Kp(m).real();
  cplx w = kI * jacobi(r.x + kI * Kp, m).sc();
  double nd = jacobi(r.x, m).nd().real();
  r.identity_residual = std::abs(w - nd);
  r.negated_residual = std::abs(w + nd);
  for (int i = 0; i < 32; ++i) {
    double x = pot.L * i / 32.0;
    r.imag_part = std::max(r.imag_part, std::abs((kI * jacobi(x + kI * Kp, m).sc()).imag()));
  }
  r.symmetry = verify_spectral_symmetry(pot, E, opt);
  return r;
}

}  // namespace sgk
