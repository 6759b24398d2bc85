#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sgk/elliptic.hpp"
#include "sgk/errors.hpp"

using namespace sgk;
using sgk::test::rel_err;

TEST_CASE("complete integrals match reference values") {
  CHECK(rel_err(complete_K(Modulus::from_k(1.0 / std::sqrt(2.0))), 1.8540746773013719) < 1e-14);
  Modulus m = Modulus::from_k(0.6);
  CHECK(rel_err(complete_K(m), 1.7507538029157525) < 1e-14);
  CHECK(rel_err(complete_Kp(m), 1.9953027776647294) < 1e-14);
  CHECK_THROWS_AS(complete_K(Modulus::from_k(1.0)), Error);
}

TEST_CASE("theta functions match reference values") {
  CHECK(rel_err(theta(3, 0.0, kI), 1.086434811213308) < 1e-14);
  cplx z(0.3, 0.2), tau(0.1, 0.8);
  CHECK(rel_err(theta(1, z, tau), {0.98362336284739003, 0.51229144771764563}) < 1e-13);
  CHECK(rel_err(theta(2, z, tau), {0.7856161359706408, -0.53759802383229015}) < 1e-13);
  CHECK(rel_err(theta(3, z, tau), {0.98602021906203049, -0.26627409778066809}) < 1e-13);
  CHECK(rel_err(theta(4, z, tau), {1.0131219640759862, 0.26564265811557042}) < 1e-13);
}

TEST_CASE("theta with characteristic reproduces the named thetas") {
  cplx z(0.3, 0.2), tau(0.1, 0.8);
  CHECK(rel_err(theta_char(0.5, 0.5, z, tau), -theta(1, z, tau)) < 1e-13);
  CHECK(rel_err(theta_char(0.5, 0.0, z, tau), theta(2, z, tau)) < 1e-13);
  CHECK(rel_err(theta_char(0.0, 0.0, z, tau), theta(3, z, tau)) < 1e-13);
  CHECK(rel_err(theta_char(0.0, 0.5, z, tau), theta(4, z, tau)) < 1e-13);
}

struct JacobiCase {
  cplx u;
  cplx k;
  cplx sn, cn, dn;
};

TEST_CASE("Jacobi functions match reference values") {
  const JacobiCase cases[] = {
      {0.7, 0.6, 0.62991711532348681, 0.77666236410845673, 0.92582589832868325},
      {{0.4, 0.9}, 0.6, {0.64717707868168182, 0.92965235859497838}, {1.2896022425775601, -0.46653896663710912},
       {1.0951991498322717, -0.19776667209628777}},
      {2.5, 0.999, 0.98707010215480502, 0.16028915569090373, 0.16625358311282197},
      {0.3, 1.5, 0.28609455267831336, 0.95820139163319721, 0.90323711758737003},
      {{0.2, 0.1}, 1.5, {0.19880314237392247, 0.094170438174006322}, {0.98473692993731819, -0.019011553703904778},
       {0.96588251298382636, -0.043611000557662072}},
      {{0.4, 0.2}, {0.5, 0.3}, {0.40052269719882586, 0.18213666987942313},
       {0.93744913776705101, -0.077817416796265895}, {1.0120940650124571, -0.030391126651599192}},
  };
  for (const JacobiCase& c : cases) {
    CAPTURE(c.u);
    CAPTURE(c.k);
    JacobiValues j = jacobi(c.u, Modulus::from_k(c.k));
    CHECK(rel_err(j.sn(), c.sn) < 1e-12);
    CHECK(rel_err(j.cn(), c.cn) < 1e-12);
    CHECK(rel_err(j.dn(), c.dn) < 1e-12);
  }
}

TEST_CASE("dn stays accurate near odd multiples of K") {
  double k = 0.999;
  double K = complete_K(Modulus::from_k(k)).real();
  for (double u : {K, 3.0 * K, K + 1e-3, 5.0 * K - 0.01}) {
    JacobiValues j = jacobi(cplx(u), k);
    double expect = std::sqrt((1 - k) * (1 + k) + k * k * std::norm(j.cn()));
    CHECK(std::abs(j.dn() - expect) < 1e-14);
  }
}

TEST_CASE("i sc(x + iK') equals -nd(x)") {
  Modulus m = Modulus::from_k(0.6);
  cplx v = kI * jacobi(0.3 + kI * complete_Kp(m), m).sc();
  CHECK(rel_err(v, -1.0159314900602875) < 1e-12);
  CHECK(rel_err(jacobi(cplx(0.3), m).nd(), 1.0159314900602875) < 1e-13);
}

TEST_CASE("quarter-period and reciprocal identities") {
  for (double k : {0.1, 0.5, 0.9}) {
    for (cplx u : {cplx(0.3, 0.0), cplx(0.2, 0.7), cplx(-1.1, 0.4)}) {
      CAPTURE(k);
      CAPTURE(u);
      CHECK(elliptic_identities(u, k).max() < 1e-10);
    }
    ReciprocalKReport r = reciprocal_K(k);
    CHECK(r.k < 1e-12);
    CHECK(r.kprime < 1e-12);
  }
}

TEST_CASE("modulus and tau round trip") {
  for (double k : {0.05, 0.5, 0.95}) {
    Modulus m = Modulus::from_k(k);
    Modulus back = modulus_from_tau(tau_of(m));
    CHECK(std::abs(back.k - m.k) < 1e-13);
    CHECK(std::abs(back.kp - m.kp) < 1e-13);
  }
}

TEST_CASE("complement for k > 1 lies below the real axis") {
  Modulus m = Modulus::from_k(1.5);
  CHECK(m.kp.imag() < 0.0);
  CHECK(std::abs(m.k * m.k + m.kp * m.kp - 1.0) < 1e-15);
}

TEST_CASE("poles raise PoleError") {
  Modulus m = Modulus::from_k(0.5);
  cplx K = complete_K(m);
  CHECK_THROWS_AS(jacobi(K, m).sc(), PoleError);
  CHECK_THROWS_AS(jacobi_fn("ns", 0.0, m), PoleError);
}
