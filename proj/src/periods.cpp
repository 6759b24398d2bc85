#include "sgk/periods.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sgk/errors.hpp"

namespace sgk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Coeffs {
  double c0, c1;  // differential = (c0 + c1 E) dE / R
};

Coeffs coeffs(Differential d) {
  switch (d) {
    case Differential::I: return {1.0, 0.0};
    case Differential::J: return {0.0, 1.0};
    case Differential::X: return {1.0, 16.0};
    case Differential::T: return {1.0, -16.0};
  }
  return {0.0, 0.0};
}

// Ascending list -inf < E4 < E3 < E2 < E1 < 0 (real parts).
std::array<double, 6> nodes_of(const Spectrum& s) {
  return {-kInf, s.E[3].real(), s.E[2].real(), s.E[1].real(), s.E[0].real(), 0.0};
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0, l1 = 0.0;
  double v = GK::integrate(f, a, b, 30, 1e-13, &err, &l1);
  if (!(err <= 1e-10 * std::max(l1, 1e-300)) || !std::isfinite(v))
    fail(Errc::QuadratureNoConvergence, "segment quadrature did not reach 1e-10");
  return v;
}

double rel(cplx a, cplx b) {
  double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// Relative size of a quantity that should vanish, measured against `scale`.
double rel0(cplx a, double scale) { return std::abs(a) / std::max(scale, 1e-300); }

cplx pow_i(int m) {
  static const cplx p[4] = {1.0, kI, -1.0, -kI};
  return p[((m % 4) + 4) % 4];
}

void require_kink(const Spectrum& s) {
  if (s.kind() != Kind::Kink)
    fail(Errc::CaseMismatch, "cycle quadrature is implemented for kink spectra only");
}

}  // namespace

cplx segment_integral(const Spectrum& s, Differential d, double from, double to) {
  require_kink(s);
  if (from == to) return 0.0;
  const auto nodes = nodes_of(s);
  double lo = std::min(from, to), hi = std::max(from, to);
  int idx = -1;
  for (int j = 0; j < 5; ++j)
    if (nodes[j] == lo && nodes[j + 1] == hi) idx = j;
  if (idx < 0) fail(Errc::BranchTrackingFailure, "segment endpoints are not neighbouring branch points");

  // On the upper bank R = i^m sqrt|R^2|, m = number of branch points >= hi.
  int m = 5 - idx;
  Coeffs c = coeffs(d);
  std::array<double, 5> pts{s.E[3].real(), s.E[2].real(), s.E[1].real(), s.E[0].real(), 0.0};

  double val = 0.0;
  if (std::isinf(lo)) {
    // E = -1/s with s = s_a sin^2(th); the endpoint factors cancel analytically.
    double a = hi, sa = -1.0 / a;
    auto f = [&](double th) {
      double sn = std::sin(th);
      double sv = sa * sn * sn;
      double P = 1.0;
      for (double p : pts)
        if (p != a && p != 0.0) P *= std::abs(1.0 + p * sv);
      double rootP = std::sqrt(P);
      return (c.c0 * 2.0 * sa * std::sqrt(sa) * sn * sn - c.c1 * 2.0 * std::sqrt(sa)) / rootP;
    };
    val = integrate(f, 0.0, kPi / 2);
  } else {
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    auto f = [&](double th) {
      double E = mid + half * std::sin(th);
      double Q = 1.0;
      for (double p : pts)
        if (p != lo && p != hi) Q *= std::abs(E - p);
      return (c.c0 + c.c1 * E) / std::sqrt(Q);
    };
    val = integrate(f, -kPi / 2, kPi / 2);
  }
  double orient = from < to ? 1.0 : -1.0;
  return 2.0 * orient * val / pow_i(m);
}

cplx path_integral(const Spectrum& s, Differential d, const std::vector<double>& nodes) {
  cplx sum = 0.0;
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) sum += segment_integral(s, d, nodes[j], nodes[j + 1]);
  return sum;
}

cplx cycle_integral(const Spectrum& s, Differential d, Cycle c, Route route) {
  require_kink(s);
  double E1 = s.E[0].real(), E2 = s.E[1].real(), E3 = s.E[2].real(), E4 = s.E[3].real();
  bool eq = route == Route::Equivalent;
  if (s.case_tag() == Case::A) {
    switch (c) {
      case Cycle::A1: return path_integral(s, d, {E1, E2});
      case Cycle::A2: return path_integral(s, d, {E3, E4});
      case Cycle::B1: return path_integral(s, d, {0.0, E1});
      case Cycle::B2: return path_integral(s, d, {-kInf, E4});
    }
  } else {
    switch (c) {
      case Cycle::A1: return path_integral(s, d, {E1, E2, E3, E4});
      case Cycle::A2: return path_integral(s, d, {E3, E2});
      case Cycle::B1: return eq ? path_integral(s, d, {-kInf, E4}) : path_integral(s, d, {0.0, E1});
      case Cycle::B2:
        return eq ? path_integral(s, d, {-kInf, E4, E3}) : path_integral(s, d, {0.0, E1, E2});
    }
  }
  fail(Errc::ParamOutOfRange, "unknown cycle");
}

namespace {

CycleIntegrals all_cycles(const Spectrum& s, Route route) {
  CycleIntegrals c;
  c.I_a1 = cycle_integral(s, Differential::I, Cycle::A1, route);
  c.I_a2 = cycle_integral(s, Differential::I, Cycle::A2, route);
  c.I_b1 = cycle_integral(s, Differential::I, Cycle::B1, route);
  c.I_b2 = cycle_integral(s, Differential::I, Cycle::B2, route);
  c.J_a1 = cycle_integral(s, Differential::J, Cycle::A1, route);
  c.J_a2 = cycle_integral(s, Differential::J, Cycle::A2, route);
  c.J_b1 = cycle_integral(s, Differential::J, Cycle::B1, route);
  c.J_b2 = cycle_integral(s, Differential::J, Cycle::B2, route);
  return c;
}

cplx det_of(const CycleIntegrals& c) { return c.I_a1 * c.J_a2 - c.I_a2 * c.J_a1; }

// x- and t-flow values of a cycle from its I/J integrals
cplx X(cplx I, cplx J) { return I + 16.0 * J; }
cplx T(cplx I, cplx J) { return I - 16.0 * J; }

}  // namespace

Mat2c period_matrix(const CycleIntegrals& c) {
  cplx w = det_of(c);
  if (std::abs(w) < 1e-300) fail(Errc::SingularDenominator, "cycle determinant vanished");
  Mat2c B;
  B << (c.I_b1 * c.J_a2 - c.I_a2 * c.J_b1) / w, (c.I_a1 * c.J_b1 - c.I_b1 * c.J_a1) / w,
      (c.I_b2 * c.J_a2 - c.I_a2 * c.J_b2) / w, (c.I_a1 * c.J_b2 - c.I_b2 * c.J_a1) / w;
  return B;
}

Mat2c period_matrix_xt(const CycleIntegrals& c) {
  Mat2c A, Bm;
  A << -X(c.I_a1, c.J_a1), T(c.I_a1, c.J_a1), -X(c.I_a2, c.J_a2), T(c.I_a2, c.J_a2);
  Bm << -X(c.I_b1, c.J_b1), T(c.I_b1, c.J_b1), -X(c.I_b2, c.J_b2), T(c.I_b2, c.J_b2);
  return Bm * A.inverse();
}

namespace {

struct EllPer {
  double a, b;  // real and imaginary periods, scaled
};

// Periods of dz / sqrt(2 (z-e1)(z-e2)(z-e3)), e1 < e2 < e3, times 16.
EllPer per3(double e1, double e2, double e3) {
  double k2 = (e2 - e1) / (e3 - e1);
  double c = 32.0 * kSqrt2 / std::sqrt(e3 - e1);
  Modulus m{std::sqrt(k2), std::sqrt(1.0 - k2)};
  return {c * complete_K(m).real(), c * complete_Kp(m).real()};
}

// One real root e and a conjugate pair z, conj(z).
struct RhPer {
  double w, ratio;
};

RhPer rhombic(double e, cplx z) {
  double A = std::abs(z - e);
  double mpar = (A + z.real() - e) / (2.0 * A);
  Modulus m{std::sqrt(mpar), std::sqrt(1.0 - mpar)};
  double K = complete_K(m).real(), Kp = complete_Kp(m).real();
  return {32.0 * kSqrt2 * K / std::sqrt(A), Kp / K};
}

}  // namespace

ReducedPeriods reduced_periods(const Spectrum& s) {
  const double h = 1.0 / 16.0;
  ReducedPeriods r;
  switch (s.family) {
    case Family::KinkA: {
      double z1 = z_map(s.E[0]).real(), z2 = z_map(s.E[1]).real();
      if (z1 > z2) std::swap(z1, z2);
      EllPer p = per3(z1, z2, h), q = per3(z1, z2, -h);
      r.w_plus = p.a;
      r.w_minus = q.a;
      r.tau_plus = kI * p.b / p.a;
      r.tau_minus = kI * q.b / q.a;
      break;
    }
    case Family::KinkB: {
      double z1 = z_map(s.E[0]).real(), z2 = z_map(s.E[1]).real();
      if (z1 > z2) std::swap(z1, z2);
      EllPer p = per3(z1, z2, h), q = per3(z1, z2, -h);
      r.w_plus = p.a;
      r.w_minus = q.a / 2.0;
      r.tau_plus = kI * p.b / (2.0 * p.a);
      r.tau_minus = 2.0 * kI * q.b / q.a;
      break;
    }
    case Family::BreatherA: {
      cplx z = z_map(s.E[0]);
      RhPer p = rhombic(h, z), q = rhombic(-h, z);
      r.w_plus = p.w;
      r.w_minus = q.w;
      r.tau_plus = 0.5 * kI * p.ratio;
      r.tau_minus = 0.5 * kI * q.ratio;
      break;
    }
    case Family::BreatherB: {
      double z1 = z_map(s.E[0]).real(), z2 = z_map(s.E[1]).real();
      EllPer p = per3(z2, z1, h), q = per3(-h, z2, z1);
      r.w_plus = p.a;
      r.w_minus = q.a;
      r.tau_plus = kI * p.b / (2.0 * p.a);
      r.tau_minus = kI * q.b / (2.0 * q.a);
      break;
    }
  }
  return r;
}

CyclePeriods reduced_cycle_periods(const Spectrum& s) {
  validate(s);
  CyclePeriods p;
  p.family = s.family;
  ReducedPeriods r = reduced_periods(s);
  p.w_plus = r.w_plus;
  p.w_minus = r.w_minus;
  p.tau_plus = r.tau_plus;
  p.tau_minus = r.tau_minus;
  p.w_plus_prime = p.tau_plus * p.w_plus;
  p.w_minus_prime = p.tau_minus * p.w_minus;
  p.w_det = p.w_plus * p.w_minus / 16.0;
  return p;
}

CyclePeriods compute_w(const Spectrum& s) {
  if (s.kind() == Kind::Breather) return reduced_cycle_periods(s);
  validate(s);
  CyclePeriods p;
  p.family = s.family;
  p.from_quadrature = true;
  p.cycles = all_cycles(s, Route::Geometric);
  const CycleIntegrals& c = p.cycles;
  p.w_det = det_of(c);
  p.B_cycles = period_matrix(c);

  if (s.case_tag() == Case::A) {
    p.cycles_equiv = c;
    p.w_plus = X(c.I_a1, c.J_a1);
    p.w_minus = T(c.I_a1, c.J_a1);
    p.w_plus_prime = X(c.I_b1, c.J_b1);
    p.w_minus_prime = T(c.I_b1, c.J_b1);
  } else {
    p.cycles_equiv = all_cycles(s, Route::Equivalent);
    // x-flow: a1 and b1; t-flow: b2 - b1 and a2 play the real and
    // imaginary roles (the time factor sits in the S-transformed frame).
    p.w_plus = 0.5 * X(c.I_a1, c.J_a1);
    p.w_plus_prime = 0.5 * X(c.I_b1, c.J_b1);
    p.w_minus = 0.5 * T(c.I_b2 - c.I_b1, c.J_b2 - c.J_b1);
    p.w_minus_prime = 0.5 * T(c.I_a2, c.J_a2);

    // Primed basis from the Case (a) loops on the same branch points.
    double E1 = s.E[0].real(), E2 = s.E[1].real(), E3 = s.E[2].real(), E4 = s.E[3].real();
    auto both = [&](const std::vector<double>& path) {
      return std::pair{path_integral(s, Differential::I, path), path_integral(s, Differential::J, path)};
    };
    auto [Ia1, Ja1] = both({E1, E2});
    auto [Ia2, Ja2] = both({E3, E4});
    auto [Ib1, Jb1] = both({0.0, E1});
    auto [Ib2, Jb2] = both({-kInf, E4});
    PrimedBasis& pb = p.primed;
    pb.cycles = {2.0 * Ia1, Ia2 - Ia1, Ib1 + Ib2, 2.0 * Ib2,
                 2.0 * Ja1, Ja2 - Ja1, Jb1 + Jb2, 2.0 * Jb2};
    pb.w_det = det_of(pb.cycles);
    pb.B = period_matrix(pb.cycles);
    pb.w_plus_a = X(Ia1, Ja1);
    pb.w_minus_a = T(Ia1, Ja1);
  }
  p.tau_plus = p.w_plus_prime / p.w_plus;
  p.tau_minus = p.w_minus_prime / p.w_minus;
  if (!(p.tau_plus.imag() > 0.0 && p.tau_minus.imag() > 0.0))
    fail(Errc::BranchTrackingFailure, "period ratios left the upper half plane");
  return p;
}

std::vector<Relation> period_relations(const Spectrum& s, const CyclePeriods& p) {
  std::vector<Relation> out;
  auto add = [&](std::string name, cplx lhs, cplx rhs) {
    out.push_back({std::move(name), lhs, rhs, rel(lhs, rhs)});
  };
  // combinations that should vanish, measured against the size of their parts
  auto add0 = [&](std::string name, cplx a, cplx b) {
    out.push_back({std::move(name), a + b, 0.0, rel0(a + b, std::max(std::abs(a), std::abs(b)))});
  };

  add("Im tau+ > 0", p.tau_plus.imag() > 0.0 ? 1.0 : 0.0, 1.0);
  add("Im tau- > 0", p.tau_minus.imag() > 0.0 ? 1.0 : 0.0, 1.0);

  if (!p.from_quadrature) {
    ReducedPeriods r = reduced_periods(s);
    add("w+ (reduced)", p.w_plus, r.w_plus);
    return out;
  }

  const CycleIntegrals& c = p.cycles;
  const CycleIntegrals& e = p.cycles_equiv;
  add("w = I(a1)J(a2) - I(a2)J(a1)", p.w_det, det_of(c));
  Mat2c Bf = period_matrix(c), Bxt = period_matrix_xt(c);
  add("B symmetric", Bf(0, 1), Bf(1, 0));
  out.push_back({"B from x/t-flow inverse = B from I/J formula", Bxt.norm(), Bf.norm(),
                 (Bxt - Bf).norm() / Bf.norm()});

  ReducedPeriods r = reduced_periods(s);
  add("w+ quadrature = w+ reduced", p.w_plus, r.w_plus);
  add("w- quadrature = w- reduced", p.w_minus, r.w_minus);
  add("tau+ quadrature = tau+ reduced", p.tau_plus, r.tau_plus);
  add("tau- quadrature = tau- reduced", p.tau_minus, r.tau_minus);

  if (s.case_tag() == Case::A) {
    add("I(a1) = 16 J(a2)", c.I_a1, 16.0 * c.J_a2);
    add("I(a2) = 16 J(a1)", c.I_a2, 16.0 * c.J_a1);
    add("I(b1) = 16 J(b2)", c.I_b1, 16.0 * c.J_b2);
    add("I(b2) = 16 J(b1)", c.I_b2, 16.0 * c.J_b1);
    add("w = w+ w- / 16", p.w_det, p.w_plus * p.w_minus / 16.0);
    add("x-flow: X(a1) = X(a2)", X(c.I_a1, c.J_a1), X(c.I_a2, c.J_a2));
    add("t-flow: T(a1) = -T(a2)", T(c.I_a1, c.J_a1), -T(c.I_a2, c.J_a2));
    cplx tp = p.tau_plus, tm = p.tau_minus;
    add("B11 = (tau+ + tau-)/2", Bf(0, 0), 0.5 * (tp + tm));
    add("B12 = (tau+ - tau-)/2", Bf(0, 1), 0.5 * (tp - tm));
    add("B22 = (tau+ + tau-)/2", Bf(1, 1), 0.5 * (tp + tm));
  } else {
    cplx Ia12 = c.I_a1 + c.I_a2, Ja12 = c.J_a1 + c.J_a2;
    cplx Ibd = c.I_b2 - c.I_b1, Jbd_eq = e.J_b2 - e.J_b1;
    add0("I(a2) = -16 J(a2)", c.I_a2, 16.0 * c.J_a2);
    add("I(a1 + a2) = 16 J(a1 + a2)", Ia12, 16.0 * Ja12);
    add("I(b1) = 16 J(b1)", c.I_b1, 16.0 * e.J_b1);
    add0("I(b2 - b1) = -16 J(b2 - b1)", Ibd, 16.0 * Jbd_eq);
    // the two routes of a b-cycle differ by a-cycles
    add0("J(b1) route difference = -J(a2)", e.J_b1 - c.J_b1, c.J_a2);
    add0("J(b2 - b1) route difference = -J(a1 + a2)", Jbd_eq - (c.J_b2 - c.J_b1), Ja12);
    // recombined loops a2' = a1 + 2a2, b1' = 2b1 - b2
    add("I(a1) = 16 J(a1 + 2a2)", c.I_a1, 16.0 * (c.J_a1 + 2.0 * c.J_a2));
    add("I(a1 + 2a2) = 16 J(a1)", c.I_a1 + 2.0 * c.I_a2, 16.0 * c.J_a1);
    add("I(2b1 - b2) = 16 J(b2)", 2.0 * c.I_b1 - c.I_b2, 16.0 * e.J_b2);
    add("I(b2) = 16 J(2b1 - b2)", c.I_b2, 16.0 * (2.0 * e.J_b1 - e.J_b2));
    const PrimedBasis& pb = p.primed;
    add("w' = w+ w- / 8 (primed basis)", pb.w_det, pb.w_plus_a * pb.w_minus_a / 8.0);
    add("B'11 = B'12", pb.B(0, 0), pb.B(0, 1));
    add("B'12 = B'21", pb.B(0, 1), pb.B(1, 0));
    out.push_back({"x-flow: X(a2) = 0", X(c.I_a2, c.J_a2), 0.0,
                   rel0(X(c.I_a2, c.J_a2), std::abs(c.I_a2))});
  }
  return out;
}

Vec2c ThetaParams::l(double x, double t) const {
  Vec2c v(x, t);
  return L * v + offset;
}

ThetaParams build_theta_params(Family f, const CyclePeriods& p, double C) {
  if (p.family != f) fail(Errc::CaseMismatch, "periods were computed for a different family");
  ThetaParams tp;
  tp.family = f;
  tp.C = C;
  cplx wp = p.w_plus, wm = p.w_minus, a = p.tau_plus, b = p.tau_minus;
  cplx h = 0.5 * kI * C;
  if (case_of(f) == Case::A) {
    tp.B << 0.5 * (a + b), 0.5 * (a - b), 0.5 * (a - b), 0.5 * (a + b);
    tp.L << -h / wp, h / wm, -h / wp, -h / wm;
  } else {
    tp.B << a, a, a, a + b;
    tp.L << -h / wp, 0.0, -h / wp, -h / wm;
  }
  if (kind_of(f) == Kind::Breather) {
    tp.B(0, 0) += 0.5;
    tp.B(1, 1) += 0.5;
  } else {
    tp.offset << 0.25, 0.25;
  }
  check_period_matrix(tp.B);
  return tp;
}

}  // namespace sgk
