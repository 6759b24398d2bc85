#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sgk/errors.hpp"
#include "sgk/theta2.hpp"

using namespace sgk;
using sgk::test::rel_err;

namespace {

Mat2c sample_B() {
  Mat2c B;
  B << cplx(0.1, 1.2), cplx(0.3, 0.4), cplx(0.3, 0.4), cplx(-0.2, 0.9);
  return B;
}

}  // namespace

TEST_CASE("diagonal Riemann matrix factorizes into genus-1 thetas") {
  cplx t1(0.1, 0.9), t2(-0.3, 1.4);
  Mat2c B = Mat2c::Zero();
  B(0, 0) = t1;
  B(1, 1) = t2;
  Vec2c l(cplx(0.2, 0.1), cplx(-0.4, 0.3));
  CHECK(rel_err(riemann_theta(l, B), theta(3, l(0), t1) * theta(3, l(1), t2)) < 1e-13);
}

TEST_CASE("quasi-periodicity") {
  Mat2c B = sample_B();
  Vec2c l(cplx(0.2, 0.1), cplx(-0.4, 0.3));
  cplx base = riemann_theta(l, B);
  CHECK(rel_err(riemann_theta(l + Vec2c(1.0, 0.0), B), base) < 1e-13);
  CHECK(rel_err(riemann_theta(l + Vec2c(0.0, 1.0), B), base) < 1e-13);
  Vec2c shifted = l + B.col(0);
  cplx factor = std::exp(-kI * kPi * B(0, 0) - 2.0 * kPi * kI * l(0));
  CHECK(rel_err(riemann_theta(shifted, B), factor * base) < 1e-12);
}

TEST_CASE("zero characteristic is the plain theta") {
  Mat2c B = sample_B();
  Vec2c l(cplx(0.7, -0.2), cplx(0.1, 0.05));
  CHECK(rel_err(riemann_theta_char(Vec2d::Zero(), Vec2d::Zero(), l, B), riemann_theta(l, B)) < 1e-14);
}

TEST_CASE("odd characteristic vanishes at the origin") {
  Mat2c B = sample_B();
  cplx v = riemann_theta_char(Vec2d(0.5, 0.0), Vec2d(0.5, 0.0), Vec2c::Zero(), B);
  CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("period matrix validation") {
  Mat2c B = sample_B();
  CHECK_NOTHROW(check_period_matrix(B));
  Mat2c asym = B;
  asym(0, 1) += 0.1;
  CHECK_THROWS_AS(check_period_matrix(asym), Error);
  Mat2c flat = B;
  flat(1, 1) = cplx(0.0, -0.5);
  CHECK_THROWS_AS(check_period_matrix(flat), Error);
}
