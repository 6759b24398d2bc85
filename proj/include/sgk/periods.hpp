#pragma once

#include <string>
#include <vector>

#include "sgk/spectral.hpp"
#include "sgk/theta2.hpp"

namespace sgk {

// dI = dE/R, dJ = E dE/R, X = dI + 16 dJ (x-flow), T = dI - 16 dJ (t-flow).
enum class Differential { I, J, X, T };
enum class Cycle { A1, A2, B1, B2 };
// Geometric: b-cycles run to the branch point at 0.  Equivalent: their
// images under E -> 1/(256E), which run to -infinity instead.
enum class Route { Geometric, Equivalent };

// Twice the integral of the differential along the real axis from `from`
// to `to` on the upper bank, R = prod sqrt(E - p) with principal roots.
// The endpoints must be neighbouring points of {-inf, E4, E3, E2, E1, 0}.
cplx segment_integral(const Spectrum& s, Differential d, double from, double to);

// Sum of segment integrals along consecutive nodes.
cplx path_integral(const Spectrum& s, Differential d, const std::vector<double>& nodes);

// Kink spectra only; breathers throw CaseMismatch.
//   Case (a): a1 = E1->E2, a2 = E3->E4, b1 = 0->E1, b2 = -inf->E4.
//   Case (b): a1 = E1->E2->E3->E4, a2 = E3->E2, b1 = 0->E1, b2 = 0->E1->E2
//             (equivalent routes: b1 = -inf->E4, b2 = -inf->E4->E3).
cplx cycle_integral(const Spectrum& s, Differential d, Cycle c, Route route = Route::Geometric);

struct CycleIntegrals {
  cplx I_a1, I_a2, I_b1, I_b2;
  cplx J_a1, J_a2, J_b1, J_b2;
};

// Periods of the Case (b) loops rebuilt from the Case (a) loops of the same
// branch points: a1' = 2a1, a2' = a2 - a1, b1' = b1 + b2, b2' = 2b2.
struct PrimedBasis {
  CycleIntegrals cycles;
  cplx w_det;
  Mat2c B;
  cplx w_plus_a, w_minus_a;  // w+- of the Case (a) loops
};

struct CyclePeriods {
  Family family = Family::KinkA;
  bool from_quadrature = false;
  CycleIntegrals cycles{};        // geometric routes
  CycleIntegrals cycles_equiv{};  // Case (b): equivalent routes for b-cycles
  cplx w_plus, w_minus, w_plus_prime, w_minus_prime;
  cplx tau_plus, tau_minus;
  cplx w_det;
  Mat2c B_cycles = Mat2c::Zero();  // I(B)I(A)^-1 from the cycle integrals
  PrimedBasis primed{};            // Case (b) kink only
};

// Closed-form periods of the reduced elliptic curves in the z-plane.
struct ReducedPeriods {
  double w_plus = 0.0, w_minus = 0.0;
  cplx tau_plus, tau_minus;
};

ReducedPeriods reduced_periods(const Spectrum& s);

// Kinks: hyperelliptic quadrature.  Breathers: reduced elliptic periods.
CyclePeriods compute_w(const Spectrum& s);
// Reduced elliptic periods for any family; stays accurate as cuts merge.
CyclePeriods reduced_cycle_periods(const Spectrum& s);

struct Relation {
  std::string name;
  cplx lhs, rhs;
  double residual;
};

// All relation residuals that apply to the spectrum's case and kind.
std::vector<Relation> period_relations(const Spectrum& s, const CyclePeriods& p);

// I(B) I(A)^-1 for the I/J cycle integrals.
Mat2c period_matrix(const CycleIntegrals& c);
// The same matrix assembled from x- and t-flow periods.
Mat2c period_matrix_xt(const CycleIntegrals& c);

struct ThetaParams {
  Family family = Family::KinkA;
  Mat2c L = Mat2c::Zero();       // l = L (x, t)^T + offset
  Vec2c offset = Vec2c::Zero();
  Mat2c B = Mat2c::Zero();
  double C = 0.0;

  Vec2c l(double x, double t) const;
};

ThetaParams build_theta_params(Family f, const CyclePeriods& p, double C);

// Scaling constant for which the closed forms solve the equation exactly.
inline constexpr double kExactC = 64.0;

}  // namespace sgk
