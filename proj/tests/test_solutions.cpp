#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sgk/errors.hpp"
#include "sgk/solutions.hpp"

using namespace sgk;

namespace {

struct Sample {
  double x, t, u;
};

std::vector<Spectrum> reference_spectra() {
  return {make_case_a_breather(1.0 / 32.0, kPi / 2), make_case_a_kink(1.0 / 32.0, 0.5),
          make_case_b_kink(1.0, 0.4), make_case_b_breather(1.0, 2.0)};
}

}  // namespace

TEST_CASE("case-a kink values match reference") {
  SolutionModel m = make_model(make_case_a_kink(1.0 / 32.0, 0.5), kExactC);
  const Sample s[] = {{0.3, 0.2, 0.32703718345533405}, {-0.7, 0.45, -0.81986710028391603},
                      {1.3, -0.9, 1.8305084563053455}};
  for (const Sample& p : s) CHECK(std::abs(eval(p.x, p.t, m) - p.u) < 1e-9);
}

TEST_CASE("case-b kink values match reference") {
  SolutionModel m = make_model(make_case_b_kink(1.0, 0.4), kExactC);
  const Sample s[] = {{0.3, 0.2, 0.43832916068703597}, {-0.7, 0.45, -1.0716616455697819},
                      {1.3, -0.9, 2.1992265763987925}};
  for (const Sample& p : s) CHECK(std::abs(eval(p.x, p.t, m) - p.u) < 1e-9);
}

TEST_CASE("static profiles match reference") {
  CHECK(std::abs(eval_static(StaticKind::Kink, 0.5, 0.4) - 11.129460662316119) < 1e-12);
  CHECK(std::abs(eval_static(StaticKind::Kink, 0.9, -1.1) - -5.4052987976995299) < 1e-12);
  CHECK(std::abs(eval_static(StaticKind::BreatherB, 0.5, 0.4) - 3.0091828499173328) < 1e-12);
  CHECK(std::abs(eval_static(StaticKind::BreatherB, 0.9, -1.1) - 2.7392690815583856) < 1e-12);
  CHECK(std::abs(eval_static(StaticKind::BreatherA, 1.0 / 0.6, 0.5, -1) - 2.9459593531885465) < 1e-12);
  CHECK(std::abs(eval_static(StaticKind::BreatherA, 1.0 / 0.6, 0.5, +1) - 3.1916126781880761) < 1e-12);
}

TEST_CASE("reciprocal-modulus chains agree") {
  for (double k : {0.3, 0.7}) {
    for (double x : {0.15, -0.4, 0.9}) {
      CAPTURE(k);
      CAPTURE(x);
      CHECK(static_breather_chain(k, x).spread() < 1e-10);
      try {
        CHECK(static_kink_chain(k, x).spread() < 1e-10);
      } catch (const PoleError&) {
      }
    }
  }
}

TEST_CASE("closed forms solve the equation") {
  for (const Spectrum& s : reference_spectra()) {
    CAPTURE(family_name(s.family));
    SolutionModel m = make_model(s, kExactC);
    FieldGrid g = eval_grid(m, -1.0, 1.0, 41, -1.0, 1.0, 41);
    CHECK(pde_residual(g).max < 1e-4);
  }
}

TEST_CASE("theta representation and conjugation") {
  for (const Spectrum& s : reference_spectra()) {
    CAPTURE(family_name(s.family));
    SolutionModel m = make_model(s, kExactC);
    for (double x : {-0.6, 0.25}) {
      for (double t : {-0.3, 0.4}) {
        CHECK(conjugation_residual(x, t, m.theta) < 1e-10);
        if (s.family != Family::KinkB) {
          CHECK(theta_factorization(x, t, m).residual < 1e-10);
          CHECK(std::abs(eval_theta_representation(x, t, m.theta).u - eval(x, t, m)) < 1e-8);
        }
      }
    }
  }
}

// The separable period matrix of the case-b kink gives a single product, not
// the two-term combination; kept visible as an expected failure.
TEST_CASE("case-b kink two-term theta factorization" * doctest::may_fail()) {
  SolutionModel m = make_model(make_case_b_kink(1.0, 0.4), kExactC);
  CHECK(theta_factorization(0.25, 0.4, m).residual < 1e-10);
}

TEST_CASE("matched kinks agree after the time shift") {
  SpectrumParams pa = matched_case_a(1.0, 0.4);
  SolutionModel a = make_model(make_case_a_kink(pa.r, pa.eta), kExactC);
  SolutionModel b = make_model(make_case_b_kink(1.0, 0.4), kExactC);
  CHECK(time_shift_equivalence(a, b).max_diff < 1e-6);
}

TEST_CASE("calibration recovers the exact scaling constant") {
  Spectrum s = make_case_a_kink(1.0 / 32.0, 0.5);
  CalibrationResult c = calibrate_C(s, compute_w(s));
  CHECK(std::abs(c.C - kExactC) < 1e-3 * kExactC);
}

TEST_CASE("kinks wind by 4 pi per spatial period") {
  SolutionModel m = make_model(make_case_a_kink(1.0 / 32.0, 0.5), kExactC);
  KinkWinding w = kink_winding(m);
  CHECK(w.M == 2);
  CHECK(std::abs(eval(0.1 + w.period, 0.3, m) - eval(0.1, 0.3, m) - 4.0 * kPi) < 1e-9);
}

TEST_CASE("misuse is rejected") {
  SolutionModel m = make_model(make_case_b_breather(1.0, 2.0), kExactC);
  CHECK_THROWS_AS(eval_kink_a(0.0, 0.0, m), Error);
  CHECK_THROWS_AS(make_model(make_case_a_kink(1.0 / 32.0, 0.5), -1.0), Error);
  CHECK_THROWS_AS(kink_winding(m), Error);
  FieldGrid g = eval_grid(m, -1.0, 1.0, 4, -1.0, 1.0, 4);
  CHECK_THROWS_AS(pde_residual(g), Error);
}
