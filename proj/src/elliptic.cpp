#include "sgk/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include "sgk/errors.hpp"

namespace sgk {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double rel_diff(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Nearest point to u of offset + 2m*w1 + 2n*w2.
cplx nearest_lattice(cplx u, cplx offset, cplx w1, cplx w2) {
  cplx d = u - offset;
  // Solve d = a*2w1 + b*2w2 over the reals.
  double a11 = 2 * w1.real(), a12 = 2 * w2.real();
  double a21 = 2 * w1.imag(), a22 = 2 * w2.imag();
  double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-300) return offset;
  double a = (d.real() * a22 - a12 * d.imag()) / det;
  double b = (a11 * d.imag() - a21 * d.real()) / det;
  return offset + std::round(a) * 2.0 * w1 + std::round(b) * 2.0 * w2;
}

bool is_real(cplx z) { return z.imag() == 0.0; }

// Real-argument sn, cn, dn for a real modulus 0 <= k <= 1.
void real_sncndn(double u, double k, double& s, double& c, double& d) {
  if (k == 0.0) {
    s = std::sin(u);
    c = std::cos(u);
    d = 1.0;
    return;
  }
  if (k >= 1.0) {
    s = std::tanh(u);
    c = d = 1.0 / std::cosh(u);
    return;
  }
  s = boost::math::jacobi_elliptic(k, u, &c, &d);
  // Boost's dn drifts by up to 1e-2 near odd multiples of K; sn and cn do
  // not, and k'^2 + k^2 cn^2 has no cancellation.
  d = std::sqrt((1.0 - k) * (1.0 + k) + k * k * c * c);
}

}  // namespace

Modulus Modulus::from_k(cplx k) {
  Modulus m;
  m.k = k;
  if (is_real(k) && std::abs(k.real()) > 1.0) {
    double r = std::sqrt(k.real() * k.real() - 1.0);
    m.kp = cplx(0.0, -std::copysign(r, k.real()));
  } else {
    m.kp = std::sqrt(1.0 - k * k);
  }
  return m;
}

Modulus Modulus::from_pair(cplx k, cplx kp) {
  cplx s = k * k + kp * kp - 1.0;
  if (std::abs(s) > 1e-10 * std::max(1.0, std::abs(k * k)))
    fail(Errc::ParamOutOfRange, "k^2 + k'^2 != 1");
  return {k, kp};
}

bool Modulus::is_real_unit() const {
  return is_real(k) && is_real(kp) && std::abs(k.real()) <= 1.0;
}

cplx agm(cplx a, cplx b) {
  for (int it = 0; it < 200; ++it) {
    cplx a1 = 0.5 * (a + b);
    cplx g = std::sqrt(a * b);
    // right choice of the square root: the one closer to the mean
    if (std::abs(a1 - g) > std::abs(a1 + g)) g = -g;
    if (std::abs(a1 - g) <= 4 * kEps * std::abs(a1)) return a1;
    a = a1;
    b = g;
  }
  fail(Errc::NonConvergent, "AGM did not converge");
}

cplx complete_K(const Modulus& m) {
  if (std::abs(m.kp) < 1e-300)
    fail(Errc::SingularModulus, "K(k) diverges at k = +-1");
  return kPi / (2.0 * agm(1.0, m.kp));
}

cplx complete_Kp(const Modulus& m) { return complete_K(m.complement()); }

cplx tau_of(const Modulus& m) {
  cplx t = kI * complete_Kp(m) / complete_K(m);
  if (!(t.imag() > 0.0))
    fail(Errc::ParamOutOfRange, "modulus maps outside the upper half plane");
  return t;
}

cplx theta_char(double a, double b, cplx z, cplx tau) {
  if (!(tau.imag() > 0.0)) fail(Errc::ParamOutOfRange, "theta needs Im tau > 0");
  // Move z into the fundamental strip |Im z| <= Im tau / 2, Re z in [-1/2, 1/2].
  double m = std::round(z.imag() / tau.imag());
  cplx zr = z - m * tau;
  double n = std::round(zr.real());
  zr -= n;
  cplx log_factor = -kI * kPi * tau * m * m - 2.0 * kI * kPi * m * (zr + b) +
                    2.0 * kI * kPi * a * n;

  auto term = [&](double j) {
    double na = j + a;
    return std::exp(kI * kPi * tau * na * na + 2.0 * kI * kPi * na * (zr + b));
  };
  cplx sum = term(0.0);
  double scale = std::abs(sum);
  int quiet = 0;
  for (int j = 1; j < 100000; ++j) {
    cplx tp = term(j), tm = term(-j);
    sum += tp + tm;
    double mag = std::abs(tp) + std::abs(tm);
    scale += mag;
    if (mag <= 1e-17 * scale) {
      if (++quiet >= 2) return sum * std::exp(log_factor);
    } else {
      quiet = 0;
    }
  }
  fail(Errc::NonConvergent, "theta series did not converge");
}

cplx theta(int j, cplx z, cplx tau) {
  switch (j) {
    case 1: return -theta_char(0.5, 0.5, z, tau);
    case 2: return theta_char(0.5, 0.0, z, tau);
    case 3: return theta_char(0.0, 0.0, z, tau);
    case 4: return theta_char(0.0, 0.5, z, tau);
  }
  fail(Errc::ParamOutOfRange, "theta index must be 1..4");
}

Modulus modulus_from_tau(cplx tau) {
  cplx t2 = theta(2, 0.0, tau), t3 = theta(3, 0.0, tau), t4 = theta(4, 0.0, tau);
  if (std::abs(t3) < 1e-300) fail(Errc::ThetaZero, "theta3(0) vanished");
  return {t2 * t2 / (t3 * t3), t4 * t4 / (t3 * t3)};
}

JacobiValues::JacobiValues(std::array<cplx, 4> num, cplx u, cplx K, cplx Kp)
    : num_(num), u_(u), K_(K), Kp_(Kp) {}

cplx JacobiValues::quot(Letter p, Letter q) const {
  if (p == q) return 1.0;
  cplx den = num_[q];
  double size = std::max(std::abs(num_[p]), std::abs(den));
  if (!(std::abs(den) > 1e-12 * size)) {
    static const char letters[] = "scdn";
    std::string name{letters[p], letters[q]};
    // zeros of the q-function sit at these offsets of the period lattice
    const cplx offsets[4] = {0.0, K_, K_ + kI * Kp_, kI * Kp_};
    throw PoleError(name, nearest_lattice(u_, offsets[q], K_, kI * Kp_));
  }
  return num_[p] / den;
}

namespace {

JacobiValues jacobi_real_modulus(cplx u, double k) {
  k = std::abs(k);
  double kp = std::sqrt(std::max(0.0, (1.0 - k) * (1.0 + k)));
  double s, c, d, s1, c1, d1;
  real_sncndn(u.real(), k, s, c, d);
  real_sncndn(u.imag(), kp, s1, c1, d1);
  std::array<cplx, 4> num{
      cplx(s * d1, c * d * s1 * c1),
      cplx(c * c1, -s * d * s1 * d1),
      cplx(d * c1 * d1, -k * k * s * c * s1),
      cplx(c1 * c1 + k * k * s * s * s1 * s1, 0.0)};
  cplx K = k < 1.0 ? kPi / (2.0 * agm(1.0, kp)) : cplx(std::numeric_limits<double>::infinity());
  cplx Kp = k > 0.0 ? kPi / (2.0 * agm(1.0, k)) : cplx(std::numeric_limits<double>::infinity());
  return JacobiValues(num, u, K, Kp);
}

JacobiValues jacobi_theta_route(cplx u, const Modulus& m) {
  cplx K = complete_K(m);
  cplx Kp = complete_Kp(m);
  cplx tau = kI * Kp / K;
  if (!(tau.imag() > 0.0))
    fail(Errc::ParamOutOfRange, "modulus maps outside the upper half plane");
  cplx t2 = theta(2, 0.0, tau), t3 = theta(3, 0.0, tau), t4 = theta(4, 0.0, tau);
  cplx z = u / (2.0 * K);
  // All four thetas gain the same factor under z -> z + 2, z -> z + 2 tau,
  // so the quotients are unchanged; reducing avoids overflow.
  double nb = std::round(z.imag() / (2.0 * tau.imag()));
  z -= 2.0 * nb * tau;
  z -= 2.0 * std::round(z.real() / 2.0);
  std::array<cplx, 4> num{
      t3 / t2 * theta(1, z, tau),
      t4 / t2 * theta(2, z, tau),
      t4 / t3 * theta(3, z, tau),
      theta(4, z, tau)};
  return JacobiValues(num, u, K, Kp);
}

}  // namespace

JacobiValues jacobi(cplx u, const Modulus& m) {
  if (m.is_real_unit()) return jacobi_real_modulus(u, m.k.real());
  return jacobi_theta_route(u, m);
}

JacobiValues jacobi(cplx u, double k) { return jacobi(u, Modulus::from_k(k)); }

cplx jacobi_fn(std::string_view name, cplx u, const Modulus& m) {
  auto letter = [&](char c) {
    switch (c) {
      case 's': return JacobiValues::S;
      case 'c': return JacobiValues::C;
      case 'd': return JacobiValues::D;
      case 'n': return JacobiValues::N;
    }
    fail(Errc::ParamOutOfRange, "unknown Jacobi function " + std::string(name));
  };
  if (name.size() != 2) fail(Errc::ParamOutOfRange, "unknown Jacobi function " + std::string(name));
  return jacobi(u, m).quot(letter(name[0]), letter(name[1]));
}

double IdentityReport::max() const {
  return std::max({dn_shift, cn_shift, recip_dn, recip_cn, recip_sc, half_shift});
}

IdentityReport elliptic_identities(cplx u, double k) {
  if (!(k > 0.0 && k < 1.0)) fail(Errc::ParamOutOfRange, "identity check needs 0 < k < 1");
  Modulus m = Modulus::from_k(k);
  Modulus mr = Modulus::from_k(1.0 / k);
  double kp = m.kp.real();
  cplx K = complete_K(m).real(), Kp = complete_Kp(m).real();

  JacobiValues base = jacobi(u, m);
  JacobiValues shifted = jacobi(u + K + kI * Kp, m);
  JacobiValues half = jacobi(u + K, m);
  JacobiValues recip = jacobi(k * u, mr);

  IdentityReport r;
  r.dn_shift = rel_diff(shifted.dn(), kI * kp * base.sc());
  r.cn_shift = rel_diff(shifted.cn(), -kI * (kp / k) * base.nc());
  r.recip_dn = rel_diff(recip.dn(), base.cn());
  r.recip_cn = rel_diff(recip.cn(), base.dn());
  r.recip_sc = rel_diff(k * base.sc(), recip.sd());
  r.half_shift = rel_diff(half.cn(), -kp * base.sd());
  return r;
}

ReciprocalKReport reciprocal_K(double k) {
  if (!(k > 0.0 && k < 1.0)) fail(Errc::ParamOutOfRange, "needs 0 < k < 1");
  Modulus m = Modulus::from_k(k);
  Modulus mr = Modulus::from_k(1.0 / k);
  cplx K = complete_K(m), Kp = complete_Kp(m);
  return {rel_diff(complete_Kp(mr), k * Kp), rel_diff(complete_K(mr), k * (K + kI * Kp))};
}

}  // namespace sgk
