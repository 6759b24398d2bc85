#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "common.hpp"
#include "sgk/errors.hpp"
#include "sgk/periods.hpp"

using namespace sgk;
using sgk::test::rel_err;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("segment integrals match reference quadrature") {
  Spectrum s = make_case_a_kink(1.0 / 32.0, 0.5);
  double E1 = s.E[0].real(), E2 = s.E[1].real(), E3 = s.E[2].real(), E4 = s.E[3].real();
  CHECK(rel_err(segment_integral(s, Differential::I, E1, E2), 423.65140079610338) < 1e-11);
  CHECK(rel_err(segment_integral(s, Differential::J, E1, E2), -14.972150185599154) < 1e-11);
  CHECK(rel_err(segment_integral(s, Differential::I, 0.0, E1), cplx(0.0, 273.83818937575826)) < 1e-11);
  CHECK(rel_err(segment_integral(s, Differential::J, -kInf, E4), cplx(0.0, 17.114886835984891)) < 1e-11);
  CHECK(rel_err(segment_integral(s, Differential::I, E3, E4), -239.55440296958646) < 1e-11);
}

TEST_CASE("case-a kink periods match reference") {
  CyclePeriods p = compute_w(make_case_a_kink(1.0 / 32.0, 0.5));
  CHECK(p.from_quadrature);
  CHECK(rel_err(p.w_plus, 184.09699782651692) < 1e-11);
  CHECK(rel_err(p.w_minus, 663.20580376568984) < 1e-11);
  CHECK(rel_err(p.tau_plus, cplx(0.0, 1.2382461409883858)) < 1e-11);
  CHECK(rel_err(p.tau_minus, cplx(0.0, 0.4820810973153685)) < 1e-11);
}

TEST_CASE("case-b kink periods match reference") {
  CyclePeriods p = compute_w(make_case_b_kink(1.0, 0.4));
  CHECK(rel_err(p.w_plus, 187.35285422645483) < 1e-11);
  CHECK(rel_err(p.w_minus, 293.68678363922042) < 1e-11);
  CHECK(rel_err(p.tau_plus, cplx(0.0, 0.69706277665961891)) < 1e-11);
  CHECK(rel_err(p.tau_minus, cplx(0.0, 1.3674283592758205)) < 1e-11);
}

TEST_CASE("period relations hold for kinks") {
  for (Spectrum s : {make_case_a_kink(0.02, 0.3), make_case_a_kink(0.04, 0.2), make_case_b_kink(1.2, 0.3),
                     make_case_b_kink(0.8, 0.5)}) {
    CyclePeriods p = compute_w(s);
    auto rel = period_relations(s, p);
    CHECK(!rel.empty());
    for (const Relation& r : rel) {
      CAPTURE(r.name);
      CHECK(r.residual < 1e-8);
    }
  }
}

TEST_CASE("reduced periods agree with quadrature for kinks") {
  for (Spectrum s : {make_case_a_kink(1.0 / 32.0, 0.5), make_case_b_kink(1.0, 0.4)}) {
    CyclePeriods q = compute_w(s), r = reduced_cycle_periods(s);
    CHECK_FALSE(r.from_quadrature);
    CHECK(rel_err(q.tau_plus, r.tau_plus) < 1e-10);
    CHECK(rel_err(q.tau_minus, r.tau_minus) < 1e-10);
    CHECK(rel_err(q.w_plus, r.w_plus) < 1e-10);
    CHECK(rel_err(q.w_minus, r.w_minus) < 1e-10);
  }
}

TEST_CASE("period matrix is symmetric with positive imaginary part") {
  CyclePeriods p = compute_w(make_case_a_kink(1.0 / 32.0, 0.5));
  CHECK(std::abs(p.B_cycles(0, 1) - p.B_cycles(1, 0)) < 1e-10);
  CHECK_NOTHROW(check_period_matrix(p.B_cycles));
  CHECK((period_matrix_xt(p.cycles) - p.B_cycles).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("breathers have no cycle quadrature") {
  Spectrum s = make_case_a_breather(1.0 / 32.0, kPi / 2);
  CHECK_THROWS_AS(cycle_integral(s, Differential::I, Cycle::A1), Error);
  CyclePeriods p = compute_w(s);
  CHECK(p.tau_plus.imag() > 0.0);
  CHECK(p.tau_minus.imag() > 0.0);
}

TEST_CASE("segments must join neighbouring branch points") {
  Spectrum s = make_case_a_kink(1.0 / 32.0, 0.5);
  CHECK_THROWS_AS(segment_integral(s, Differential::I, 0.0, s.E[2].real()), Error);
}
