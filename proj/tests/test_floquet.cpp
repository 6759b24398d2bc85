#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sgk/errors.hpp"
#include "sgk/floquet.hpp"

using namespace sgk;
using sgk::test::rel_err;

TEST_CASE("free discriminant matches the closed form") {
  PeriodicPotential p = free_potential(2.0);
  const std::pair<double, double> ref[] = {
      {0.01, 0.99514209578345398}, {0.04, 1.9495882141378866}, {0.3, 1.2938865152510942}};
  for (auto [E, d] : ref) {
    CHECK(std::abs(free_delta(2.0, E) - d) < 1e-14);
    CHECK(std::abs(transfer_matrix(p, E).delta - d) < 1e-8);
  }
}

TEST_CASE("test potentials match reference integration") {
  PeriodicPotential even = even_test_potential(0.3, 2.0);
  CHECK(std::abs(transfer_matrix(even, 0.05).delta - cplx(1.989705425296639, 0.0)) < 1e-8);
  CHECK(std::abs(transfer_matrix(even, cplx(0.2, 0.1)).delta - cplx(1.701049359784001, -0.2850912516048526)) < 1e-8);
  PeriodicPotential odd = odd_test_potential(0.2, 2.0);
  CHECK(std::abs(transfer_matrix(odd, 0.05).delta - 0.06704218321979924) < 1e-8);
}

TEST_CASE("spectral symmetry for even and odd potentials") {
  auto E = default_energy_samples(20);
  CHECK(E.size() == 20);
  SymmetryReport even = verify_spectral_symmetry(even_test_potential(0.3, 2.0), E);
  CHECK(even.max_defect < 1e-6);
  CHECK(even.max_det_defect < 1e-8);
  SymmetryReport odd = verify_spectral_symmetry(odd_test_potential(0.2, 2.0), E);
  CHECK(odd.M == 1);
  CHECK(odd.max_defect < 1e-6);
  CHECK(odd.max_det_defect < 1e-8);
}

TEST_CASE("gauge form gives the same discriminant") {
  PeriodicPotential p = odd_test_potential(0.2, 2.0);
  FloquetOptions gauge;
  gauge.form = LaxForm::Gauge;
  for (cplx E : {cplx(0.05), cplx(0.1, 0.03)})
    CHECK(std::abs(transfer_matrix(p, E).delta - transfer_matrix(p, E, gauge).delta) < 1e-8);
}

TEST_CASE("discriminant is analytic in E") {
  PeriodicPotential p = even_test_potential(0.3, 2.0);
  cplx E(0.07, 0.02);
  double h = 1e-4;
  cplx dre = (transfer_matrix(p, E + h).delta - transfer_matrix(p, E - h).delta) / (2.0 * h);
  cplx dim = (transfer_matrix(p, E + kI * h).delta - transfer_matrix(p, E - kI * h).delta) / (2.0 * kI * h);
  CHECK(rel_err(dre, dim) < 1e-5);
}

TEST_CASE("Floquet multipliers multiply to one") {
  FloquetResult r = transfer_matrix(even_test_potential(0.3, 2.0), cplx(0.3, 0.1));
  CHECK(std::abs(r.det - 1.0) < 1e-8);
  CHECK(std::abs(r.rho_pm[0] * r.rho_pm[1] - 1.0) < 1e-8);
}

TEST_CASE("shift by iK' uses i sc(x + iK') = -nd(x)") {
  auto E = default_energy_samples(6);
  ImaginaryShiftReport r = imaginary_shift_check(0.6, 0.5, kI * complete_Kp(Modulus::from_k(0.6)), E);
  CHECK(r.negated_residual < 1e-12);
  CHECK(r.identity_residual > 1.0);
  CHECK(r.imag_part < 1e-12);
  CHECK(r.symmetry.max_defect < 1e-5);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(transfer_matrix(free_potential(2.0), 0.0), Error);
  CHECK_THROWS_AS(elliptic_potential(0.6, 0.5, cplx(0.3, 0.0)), Error);
  PeriodicPotential p = even_test_potential(0.3, 2.0);
  p.parity = Parity::None;
  CHECK_THROWS_AS(verify_spectral_symmetry(p, default_energy_samples(4)), Error);
  PeriodicPotential q = odd_test_potential(0.2, 2.0);
  q.M = 0;
  CHECK_THROWS_AS(validate(q), Error);
}
