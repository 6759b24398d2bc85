#include "sgk/solutions.hpp"

#include <algorithm>
#include <cmath>

#include "sgk/errors.hpp"

namespace sgk {

namespace {

double K_of(double k) {
  if (!(k < 1.0)) fail(Errc::SingularModulus, "K(k) diverges at k = 1");
  return kPi / (2.0 * agm(1.0, std::sqrt((1.0 - k) * (1.0 + k))).real());
}

JacobiValues jr(double u, double k) { return jacobi(cplx(u, 0.0), k); }

// 4 atan(y/x) continued across the poles of a quotient with period 2K in a.
double unwrap_kink(double y, double x, double a, double K) {
  return 4.0 * std::atan(y / x) + 4.0 * kPi * std::round(a / (2.0 * K));
}

}  // namespace

RealModulus real_modulus_from_tau(cplx tau) {
  Modulus m = modulus_from_tau(tau);
  RealModulus r{m.k.real(), m.kp.real()};
  if (std::abs(m.k.imag()) > 1e-12 || std::abs(m.kp.imag()) > 1e-12)
    fail(Errc::ParamOutOfRange, "modulus from tau is not real");
  return r;
}

SolutionModel make_model(const Spectrum& s, const CyclePeriods& p, double C) {
  if (!(C > 0.0)) fail(Errc::ParamOutOfRange, "C must be positive");
  SolutionModel m;
  m.family = s.family;
  m.spectrum = s;
  m.periods = p;
  m.C = C;
  m.theta = build_theta_params(s.family, p, C);
  double wp = p.w_plus.real(), wm = p.w_minus.real();
  if (s.case_tag() == Case::A) {
    m.mx = real_modulus_from_tau(2.0 * p.tau_plus);
    m.mt = real_modulus_from_tau(2.0 * p.tau_minus);
    m.alpha = 2.0 * C * K_of(m.mx.k) / wp;
    m.beta = 2.0 * C * K_of(m.mt.k) / wm;
  } else {
    m.mx = real_modulus_from_tau(4.0 * p.tau_plus);
    m.mt = real_modulus_from_tau(p.tau_minus);
    m.alpha = 2.0 * C * K_of(m.mx.k) / wp;
    m.beta = C * K_of(m.mt.k) / wm;
  }
  const RealModulus &a = m.mx, &b = m.mt;
  switch (s.family) {
    case Family::BreatherA: m.prefactor = std::sqrt(a.k * b.k / (a.kp * b.kp)); break;
    case Family::KinkA: m.prefactor = std::sqrt(a.k * b.k); break;
    case Family::KinkB: m.prefactor = std::sqrt(a.k / b.k); break;
    case Family::BreatherB: m.prefactor = std::sqrt(a.k / b.kp); break;
  }
  return m;
}

SolutionModel make_model(const Spectrum& s, double C) { return make_model(s, compute_w(s), C); }

static void require(const SolutionModel& m, Family f) {
  if (m.family != f) fail(Errc::CaseMismatch, "model belongs to " + std::string(family_name(m.family)));
}

double eval_breather_a(double x, double t, const SolutionModel& m) {
  require(m, Family::BreatherA);
  JacobiValues X = jr(m.alpha * x, m.mx.kp), T = jr(m.beta * t, m.mt.kp);
  // 4 atan(P nc nc), continued through the poles of nc: P > 0 keeps atan2 smooth
  return 4.0 * std::atan2(m.prefactor, X.cn().real() * T.cn().real());
}

double eval_kink_a(double x, double t, const SolutionModel& m) {
  require(m, Family::KinkA);
  double a = m.alpha * x;
  JacobiValues X = jr(a, m.mx.kp), T = jr(m.beta * t, m.mt.kp);
  return unwrap_kink(m.prefactor * X.sn().real(), X.cn().real() * T.dn().real(), a, K_of(m.mx.kp));
}

double eval_kink_b(double x, double t, const SolutionModel& m) {
  require(m, Family::KinkB);
  double a = m.alpha * x;
  JacobiValues X = jr(a, m.mx.kp), T = jr(m.beta * t, m.mt.kp);
  return unwrap_kink(m.prefactor * X.sn().real() * T.dn().real(), X.cn().real(), a, K_of(m.mx.kp));
}

double eval_breather_b(double x, double t, const SolutionModel& m) {
  require(m, Family::BreatherB);
  JacobiValues X = jr(m.alpha * x, m.mx.kp), T = jr(m.beta * t, m.mt.kp);
  return 4.0 * std::atan2(m.prefactor * T.dn().real(), X.dn().real() * T.cn().real());
}

double eval(double x, double t, const SolutionModel& m) {
  switch (m.family) {
    case Family::BreatherA: return eval_breather_a(x, t, m);
    case Family::KinkA: return eval_kink_a(x, t, m);
    case Family::KinkB: return eval_kink_b(x, t, m);
    case Family::BreatherB: return eval_breather_b(x, t, m);
  }
  return 0.0;
}

KinkWinding kink_winding(const SolutionModel& m) {
  if (m.spectrum.kind() != Kind::Kink) fail(Errc::CaseMismatch, "breathers carry no winding");
  // sc(a; k') has one pole per period 2K(k') of a; each adds 4 pi
  return {2.0 * K_of(m.mx.kp) / m.alpha, 2};
}

namespace {

cplx kink_ratio(double x, double t, const ThetaParams& tp) {
  Vec2c l = tp.l(x, t);
  Vec2c h(0.5, 0.5);
  cplx den = riemann_theta(l, tp.B);
  if (std::abs(den) < 1e-14) fail(Errc::ThetaZero, "Theta(l) vanished");
  return riemann_theta(l + h, tp.B) / den;
}

// Continue arg of the ratio along a straight segment, refining until every
// step changes the argument by less than pi/4.
double track(const ThetaParams& tp, double xa, double ta, double xb, double tb, double arg0) {
  if (xa == xb && ta == tb) return arg0;
  int n = std::max(1, static_cast<int>(std::ceil(std::hypot(xb - xa, tb - ta) / 0.05)));
  for (int attempt = 0; attempt < 8; ++attempt, n *= 2) {
    double arg = arg0;
    cplx prev = kink_ratio(xa, ta, tp);
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j) {
      double s = static_cast<double>(j) / n;
      cplx cur = kink_ratio(xa + s * (xb - xa), ta + s * (tb - ta), tp);
      double d = std::arg(cur / prev);
      if (std::abs(d) > kPi / 4) ok = false;
      arg += d;
      prev = cur;
    }
    if (ok) return arg;
  }
  fail(Errc::BranchTrackingFailure, "argument of the theta ratio could not be followed");
}

}  // namespace

ThetaValue eval_theta_representation(double x, double t, const ThetaParams& tp) {
  ThetaValue v;
  if (kind_of(tp.family) == Kind::Breather) {
    cplx th = riemann_theta(tp.l(x, t), tp.B);
    if (std::abs(th.real()) < 1e-14 && std::abs(th.imag()) < 1e-14)
      fail(Errc::ThetaZero, "Theta(l) vanished");
    cplx th2 = riemann_theta(tp.l(x, t) + Vec2c(0.5, 0.5), tp.B);
    v.u = 4.0 * std::atan2(th.imag(), th.real());
    v.imag_residue = std::abs(th2 - std::conj(th)) / std::abs(th);
    return v;
  }
  cplx r0 = kink_ratio(0.0, 0.0, tp);
  double arg = track(tp, 0.0, 0.0, 0.0, t, std::arg(r0));
  arg = track(tp, 0.0, t, x, t, arg);
  cplx r = kink_ratio(x, t, tp);
  // 2i log r = 2i (ln|r| + i arg) = -2 arg + 2i ln|r|
  v.u = -2.0 * arg;
  v.imag_residue = std::abs(2.0 * std::log(std::abs(r)));
  return v;
}

FactorizationReport theta_factorization(double x, double t, const SolutionModel& m) {
  const ThetaParams& tp = m.theta;
  const CyclePeriods& p = m.periods;
  cplx a = p.tau_plus, b = p.tau_minus;
  Vec2c l = tp.l(x, t), half(0.5, 0.5);
  FactorizationReport r;
  r.genus2 = riemann_theta(l, tp.B);
  r.genus2_shifted = riemann_theta(l + half, tp.B);
  auto th = [](int j, cplx z, cplx tau) { return theta(j, z, tau); };
  switch (m.family) {
    case Family::BreatherA: {
      cplx X = 2.0 * tp.L(0, 0) * x, T = 2.0 * tp.L(0, 1) * t;
      r.product = th(4, X, 2.0 * a) * th(4, T, 2.0 * b) + kI * th(2, X, 2.0 * a) * th(2, T, 2.0 * b);
      r.product_shifted = std::conj(r.product);
      break;
    }
    case Family::KinkA: {
      cplx X = 2.0 * tp.L(0, 0) * x, T = 2.0 * tp.L(0, 1) * t;
      cplx p1 = th(4, X, 2.0 * a) * th(3, T, 2.0 * b), p2 = th(1, X, 2.0 * a) * th(2, T, 2.0 * b);
      r.product = p1 - p2;
      r.product_shifted = p1 + p2;
      break;
    }
    case Family::KinkB: {
      cplx X = 2.0 * tp.L(0, 0) * x, T = tp.L(1, 1) * t;
      cplx p1 = th(4, X, 4.0 * a) * th(2, T, b), p2 = th(1, X, 4.0 * a) * th(3, T, b);
      r.product = p1 - p2;
      r.product_shifted = p1 + p2;
      break;
    }
    case Family::BreatherB: {
      cplx X = 2.0 * tp.L(0, 0) * x, T = tp.L(1, 1) * t;
      r.product = th(3, X, 4.0 * a) * th(4, T, b) + kI * th(2, X, 4.0 * a) * th(3, T, b);
      r.product_shifted = std::conj(r.product);
      break;
    }
  }
  double scale = std::max(std::abs(r.genus2), std::abs(r.genus2_shifted));
  r.residual = std::max(std::abs(r.genus2 - r.product), std::abs(r.genus2_shifted - r.product_shifted)) / scale;
  return r;
}

double conjugation_residual(double x, double t, const ThetaParams& tp) {
  Vec2c l = tp.l(x, t);
  cplx a = riemann_theta(l, tp.B);
  cplx b = riemann_theta(l + Vec2c(0.5, 0.5), tp.B);
  if (std::abs(a) < 1e-300) fail(Errc::ThetaZero, "Theta(l) vanished");
  return std::abs(b - std::conj(a)) / std::abs(a);
}

double eval_static(StaticKind kind, double k, double x, int sign) {
  if (kind == StaticKind::BreatherA) {
    if (!(k != 0.0 && std::abs(k) != 1.0)) fail(Errc::ParamOutOfRange, "static breather needs k != 0, +-1");
    Modulus m = Modulus::from_k(k);
    cplx pre = std::sqrt(kI * m.kp / m.k);
    cplx arg = (m.k + static_cast<double>(sign) * kI * m.kp) * x;
    cplx v = pre * jacobi(arg, m).nc();
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v)))
      fail(Errc::ParamOutOfRange, "static breather is not real for this k");
    return 4.0 * std::atan(v.real());
  }
  if (!(k > 0.0 && k < 1.0)) fail(Errc::ParamOutOfRange, "static profile needs 0 < k < 1");
  double kp = std::sqrt((1.0 - k) * (1.0 + k));
  if (kind == StaticKind::Kink) {
    double a = x / (1.0 - kp);
    JacobiValues j = jr(a, k);
    return unwrap_kink(std::sqrt(kp) * j.sn().real(), j.cn().real(), a, K_of(k));
  }
  return 4.0 * std::atan(std::sqrt(kp) * jr(x / (1.0 + kp), k).nd().real());
}

double StaticChain::spread() const {
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

StaticChain static_kink_chain(double k, double x) {
  if (!(k > 0.0 && k < 1.0)) fail(Errc::ParamOutOfRange, "needs 0 < k < 1");
  double kp = std::sqrt((1.0 - k) * (1.0 + k));
  Modulus mr = Modulus::from_k(1.0 / k);
  StaticChain c;
  // principal branches; compared away from the poles of sc
  c.values.push_back(4.0 * std::atan(std::sqrt(kp) * jr(x / (1.0 - kp), k).sc().real()));
  c.values.push_back(4.0 * std::atan(std::sqrt(kp) / k * jacobi(k * x / (1.0 - kp), mr).sd().real()));
  cplx pre = std::sqrt(kI * mr.k * mr.kp);
  cplx v = pre * jacobi((mr.k + kI * mr.kp) * x, mr).sd();
  c.values.push_back(4.0 * std::atan(v.real()));
  return c;
}

StaticChain static_breather_chain(double k, double x) {
  if (!(k > 0.0 && k < 1.0)) fail(Errc::ParamOutOfRange, "needs 0 < k < 1");
  double kp = std::sqrt((1.0 - k) * (1.0 + k));
  Modulus mr = Modulus::from_k(1.0 / k);
  StaticChain c;
  c.values.push_back(eval_static(StaticKind::BreatherA, 1.0 / k, x, -1));
  c.values.push_back(4.0 * std::atan(std::sqrt(kp) * jacobi(k * x / (1.0 + kp), mr).nc().real()));
  c.values.push_back(eval_static(StaticKind::BreatherB, k, x));
  return c;
}

FieldGrid eval_grid(const SolutionModel& m, double x0, double x1, int nx, double t0, double t1, int nt) {
  if (nx < 1 || nt < 1) fail(Errc::ParamOutOfRange, "grid needs at least one point per axis");
  FieldGrid g{x0, x1, t0, t1, nx, nt, {}};
  g.u.resize(static_cast<std::size_t>(nx) * nt);
  for (int it = 0; it < nt; ++it)
    for (int ix = 0; ix < nx; ++ix) g.u[static_cast<std::size_t>(it) * nx + ix] = eval(g.x(ix), g.t(it), m);
  return g;
}

FieldGrid eval_theta_grid(const ThetaParams& tp, double x0, double x1, int nx, double t0, double t1, int nt) {
  FieldGrid g{x0, x1, t0, t1, nx, nt, {}};
  g.u.resize(static_cast<std::size_t>(nx) * nt);
  for (int it = 0; it < nt; ++it)
    for (int ix = 0; ix < nx; ++ix)
      g.u[static_cast<std::size_t>(it) * nx + ix] = eval_theta_representation(g.x(ix), g.t(it), tp).u;
  return g;
}

ResidualReport pde_residual(const FieldGrid& g) {
  if (g.nx < 5 || g.nt < 5) fail(Errc::GridTooCoarse, "the 4th-order stencil needs 5 points per axis");
  double hx = (g.x1 - g.x0) / (g.nx - 1), ht = (g.t1 - g.t0) / (g.nt - 1);
  if (!(hx > 0.0 && ht > 0.0) || hx > 0.5 || ht > 0.5)
    fail(Errc::GridTooCoarse, "grid spacing must lie in (0, 0.5]");
  auto d2 = [](double m2, double m1, double c, double p1, double p2, double h) {
    return (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
  };
  ResidualReport r;
  double sum2 = 0.0;
  for (int it = 2; it < g.nt - 2; ++it)
    for (int ix = 2; ix < g.nx - 2; ++ix) {
      double c = g.at(ix, it);
      double uxx = d2(g.at(ix - 2, it), g.at(ix - 1, it), c, g.at(ix + 1, it), g.at(ix + 2, it), hx);
      double utt = d2(g.at(ix, it - 2), g.at(ix, it - 1), c, g.at(ix, it + 1), g.at(ix, it + 2), ht);
      double res = std::abs(utt - uxx + std::sin(c));
      sum2 += res * res;
      ++r.points;
      if (res > r.max || !std::isfinite(res)) {
        r.max = std::isfinite(res) ? res : INFINITY;
        r.x_at_max = g.x(ix);
        r.t_at_max = g.t(it);
      }
    }
  r.l2 = std::sqrt(sum2 / std::max(1, r.points));
  return r;
}

double calibration_residual(const Spectrum& s, const CyclePeriods& p, double C) {
  SolutionModel m = make_model(s, p, C);
  const double h = 0.02;
  FieldGrid g = eval_grid(m, 0.1, 0.1 + 20 * h, 21, 0.2, 0.2 + 20 * h, 21);
  return pde_residual(g).max;
}

CalibrationResult calibrate_C(const Spectrum& s, const CyclePeriods& p, double C_max) {
  if (!(C_max > 0.0)) fail(Errc::ParamOutOfRange, "C_max must be positive");
  CalibrationResult out;
  auto f = [&](double C) {
    ++out.evaluations;
    return calibration_residual(s, p, C);
  };
  const int n = 200;
  int best = 1;
  double fbest = INFINITY;
  for (int j = 1; j <= n; ++j) {
    double v = f(C_max * j / n);
    if (v < fbest) {
      fbest = v;
      best = j;
    }
  }
  double a = C_max * (best - 1) / n, b = C_max * std::min(best + 1, n) / n;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-12 * b) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = f(d);
    }
  }
  out.C = 0.5 * (a + b);
  out.residual = f(out.C);
  if (!(out.residual < 1e-6))
    fail(Errc::CalibrationFailed, "no C in (0, C_max] brings the residual below 1e-6");
  return out;
}

TimeShiftReport time_shift_equivalence(const SolutionModel& a, const SolutionModel& b, int n) {
  if (a.family != Family::KinkA || b.family != Family::KinkB)
    fail(Errc::CaseMismatch, "time shift compares a Case (a) kink with a Case (b) kink");
  if (spectrum_distance(a.spectrum, b.spectrum) > 1e-10)
    fail(Errc::SpectraMismatch, "the two kinks do not share their branch points");
  TimeShiftReport r;
  // dn(u + K) = k' nd(u) carries the Case (b) time factor onto the Case (a) one
  r.shift = K_of(b.mt.kp) / b.beta;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x = -2.0 + 4.0 * i / (n - 1), t = -2.0 + 4.0 * j / (n - 1);
      r.max_diff = std::max(r.max_diff, std::abs(eval(x, t, a) - eval(x, t + r.shift, b)));
    }
  return r;
}

}  // namespace sgk
