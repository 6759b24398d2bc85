#pragma once

#include <string>
#include <vector>

#include "sgk/periods.hpp"

namespace sgk {

// Real modulus pair, k^2 + k'^2 = 1.
struct RealModulus {
  double k = 0.0, kp = 1.0;
};

// k(tau), k'(tau) for purely imaginary tau.
RealModulus real_modulus_from_tau(cplx tau);

struct SolutionModel {
  Family family = Family::KinkA;
  Spectrum spectrum;
  CyclePeriods periods;
  ThetaParams theta;
  double C = 0.0;
  // x and t moduli: k(2 tau+-) in Case (a); k(4 tau+) and k(tau-) in Case (b).
  // The Jacobi functions themselves run on the complements.
  RealModulus mx, mt;
  double prefactor = 0.0;
  double alpha = 0.0, beta = 0.0;  // u depends on (alpha x, beta t)
};

SolutionModel make_model(const Spectrum& s, const CyclePeriods& p, double C);
SolutionModel make_model(const Spectrum& s, double C);

double eval_breather_a(double x, double t, const SolutionModel& m);
double eval_kink_a(double x, double t, const SolutionModel& m);
double eval_kink_b(double x, double t, const SolutionModel& m);
double eval_breather_b(double x, double t, const SolutionModel& m);
double eval(double x, double t, const SolutionModel& m);

// Spatial period of the kink argument and the winding per period (2 pi M).
struct KinkWinding {
  double period = 0.0;
  int M = 0;
};
KinkWinding kink_winding(const SolutionModel& m);

// Genus-2 theta form.  Breathers: 4 arg Theta(l).  Kinks: 2i log of
// Theta(l + 1/2)/Theta(l), continued along (0,0) -> (0,t) -> (x,t).
struct ThetaValue {
  double u = 0.0;
  double imag_residue = 0.0;
};
ThetaValue eval_theta_representation(double x, double t, const ThetaParams& tp);

// Genus-2 Theta(l) (and Theta(l + 1/2) for kinks) against the genus-1
// product forms.  The x- and t-arguments are twice the coefficients in l.
struct FactorizationReport {
  cplx genus2, product;
  cplx genus2_shifted, product_shifted;  // kinks only
  double residual = 0.0;                  // max relative difference
};
FactorizationReport theta_factorization(double x, double t, const SolutionModel& m);

// |Theta(l + (1/2, 1/2)) - conj Theta(l)| / |Theta(l)|
double conjugation_residual(double x, double t, const ThetaParams& tp);

// Static profiles.
enum class StaticKind { Kink, BreatherA, BreatherB };
// Kink, BreatherB: real 0 < k < 1.  BreatherA: any real k != 0, 1, with
// sqrt(i k'/k) nc((k + sign i k') x; k); the result must come out real.
double eval_static(StaticKind kind, double k, double x, int sign = -1);

// The three displayed forms of the static kink under k -> 1/k.
struct StaticChain {
  std::vector<double> values;
  double spread() const;
};
StaticChain static_kink_chain(double k, double x);
StaticChain static_breather_chain(double k, double x);

struct FieldGrid {
  double x0 = -5.0, x1 = 5.0, t0 = -5.0, t1 = 5.0;
  int nx = 101, nt = 101;
  std::vector<double> u;  // u[it * nx + ix]

  double x(int ix) const { return nx > 1 ? x0 + (x1 - x0) * ix / (nx - 1) : x0; }
  double t(int it) const { return nt > 1 ? t0 + (t1 - t0) * it / (nt - 1) : t0; }
  double at(int ix, int it) const { return u[static_cast<std::size_t>(it) * nx + ix]; }
};

FieldGrid eval_grid(const SolutionModel& m, double x0, double x1, int nx, double t0, double t1, int nt);
FieldGrid eval_theta_grid(const ThetaParams& tp, double x0, double x1, int nx, double t0, double t1, int nt);

struct ResidualReport {
  double max = 0.0, l2 = 0.0;
  double x_at_max = 0.0, t_at_max = 0.0;
  int points = 0;
};

// u_tt - u_xx + sin u with 4th-order central differences on interior points.
ResidualReport pde_residual(const FieldGrid& g);

struct CalibrationResult {
  double C = 0.0;
  double residual = 0.0;
  int evaluations = 0;
};

// Minimises the residual on a 21x21 grid of spacing 0.02 over C in (0, C_max].
CalibrationResult calibrate_C(const Spectrum& s, const CyclePeriods& p, double C_max = 100.0);
double calibration_residual(const Spectrum& s, const CyclePeriods& p, double C);

struct TimeShiftReport {
  double shift = 0.0;
  double max_diff = 0.0;
};

// q_a(x, t) against q_b(x, t + K(k_t')/beta_b) on [-2, 2]^2.
TimeShiftReport time_shift_equivalence(const SolutionModel& a, const SolutionModel& b, int n = 21);

}  // namespace sgk
