#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sgk/elliptic.hpp"

namespace sgk {

enum class Parity { None, Even, Odd };
const char* parity_name(Parity p);

// u(x + L) = u(x) + 2 pi M, v(x + L) = v(x), v = u_t.
struct PeriodicPotential {
  std::string name;
  std::function<double(double)> u;
  std::function<double(double)> ux;  // optional; finite differences if empty
  std::function<double(double)> v;   // optional; zero if empty
  double L = 1.0;
  int M = 0;
  Parity parity = Parity::None;
};

struct PotentialCheck {
  double period_defect = 0.0;    // max |u(x+L) - u(x) - 2 pi M|
  double v_period_defect = 0.0;  // max |v(x+L) - v(x)|
  int charge = 0;                // round((u(L) - u(0)) / 2 pi)
  Parity sampled_parity = Parity::None;
};

// Samples the periodicity conditions and the parity of u (and v).
PotentialCheck check_potential(const PeriodicPotential& pot);
// Throws ParamOutOfRange if the conditions fail or the charge disagrees with M.
void validate(const PeriodicPotential& pot);

using CMat2 = std::array<std::array<cplx, 2>, 2>;

enum class LaxForm { Original, Gauge };

struct FloquetOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  LaxForm form = LaxForm::Original;
  long max_steps = 200000;
};

struct FloquetResult {
  cplx E;
  CMat2 T{};  // rows: coefficients of phi_+(x+L), phi_-(x+L) on phi_+(x), phi_-(x)
  cplx delta;
  std::array<cplx, 2> rho_pm{};
  cplx det;
  int M = 0;
  long steps = 0;
};

// Integrates the linear system over [0, L] from the identity.
FloquetResult transfer_matrix(const PeriodicPotential& pot, cplx E, const FloquetOptions& opt = {});

// Delta for u = v = 0: 2 cos(L (sqrt E - 1/(16 sqrt E))).
cplx free_delta(double L, cplx E);

// E' = 1/(256 E).
cplx dual_energy(cplx E);

struct SymmetryReport {
  int M = 0;
  Parity parity = Parity::None;
  std::vector<cplx> E;
  std::vector<cplx> delta, delta_dual;
  std::vector<double> defect;  // |Delta(E') - (-1)^M Delta(E)|
  double max_defect = 0.0;
  double max_det_defect = 0.0;
};

SymmetryReport verify_spectral_symmetry(const PeriodicPotential& pot, const std::vector<cplx>& E,
                                        const FloquetOptions& opt = {});

// Deterministic E-samples on an annulus symmetric under E -> 1/(256 E).
// Samples on the negative real axis are moved to +i 1e-9.
std::vector<cplx> default_energy_samples(int n);

// Test potentials.
PeriodicPotential free_potential(double L);
PeriodicPotential even_test_potential(double a, double L);  // 4 atan(a cos(2 pi x/L)), M = 0
PeriodicPotential odd_test_potential(double eps, double L); // 2 pi x/L + eps sin(2 pi x/L), M = 1

// 4 atan(c w(x)), w = sc(x; k) for x0 = 0 and w = i sc(x + iK'; k) for x0 = iK'.
// Other centres throw AnalyticContinuationUnavailable.
PeriodicPotential elliptic_potential(double k, double c, cplx x0);

struct ImaginaryShiftReport {
  double x = 0.0, k = 0.0;
  double identity_residual = 0.0;  // |i sc(x + iK') - nd(x)|
  double negated_residual = 0.0;   // |i sc(x + iK') + nd(x)|
  double imag_part = 0.0;          // max |Im i sc(x + iK')| on the period
  SymmetryReport symmetry;
};

ImaginaryShiftReport imaginary_shift_check(double k, double c, cplx x0, const std::vector<cplx>& E,
                                           const FloquetOptions& opt = {});

}  // namespace sgk
