#pragma once

#include <array>
#include <complex>
#include <string_view>

namespace sgk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// A modulus together with its complement, k^2 + k'^2 = 1.
// For real k > 1 the complement is taken on the Im k' < 0 side (k -> k + i0).
struct Modulus {
  cplx k{0.0};
  cplx kp{1.0};

  static Modulus from_k(cplx k);
  static Modulus from_pair(cplx k, cplx kp);
  Modulus complement() const { return {kp, k}; }
  bool is_real_unit() const;
};

cplx agm(cplx a, cplx b);

// K(k) = pi / (2 AGM(1, k')).  Throws SingularModulus at k = +-1.
cplx complete_K(const Modulus& m);
cplx complete_Kp(const Modulus& m);

// tau = i K'/K, upper half plane.
cplx tau_of(const Modulus& m);

// theta_j(z | tau), nome exp(i pi tau), quasi-period 1 in z.
cplx theta(int j, cplx z, cplx tau);
// sum_n exp(i pi tau (n+a)^2 + 2 pi i (n+a)(z+b))
cplx theta_char(double a, double b, cplx z, cplx tau);

// k = theta2^2/theta3^2, k' = theta4^2/theta3^2.
Modulus modulus_from_tau(cplx tau);

// Values of sn, cn, dn at one point kept as numerators over a common
// denominator, so quotients stay finite away from their own poles.
class JacobiValues {
 public:
  enum Letter { S = 0, C = 1, D = 2, N = 3 };

  JacobiValues(std::array<cplx, 4> num, cplx u, cplx K, cplx Kp);

  // Glaisher quotient pq = p/q, e.g. quot(S, C) = sc.
  cplx quot(Letter p, Letter q) const;

  cplx sn() const { return quot(S, N); }
  cplx cn() const { return quot(C, N); }
  cplx dn() const { return quot(D, N); }
  cplx sc() const { return quot(S, C); }
  cplx sd() const { return quot(S, D); }
  cplx nc() const { return quot(N, C); }
  cplx nd() const { return quot(N, D); }
  cplx dc() const { return quot(D, C); }
  cplx cd() const { return quot(C, D); }
  cplx ns() const { return quot(N, S); }
  cplx cs() const { return quot(C, S); }
  cplx ds() const { return quot(D, S); }

  const std::array<cplx, 4>& numerators() const { return num_; }

 private:
  std::array<cplx, 4> num_;
  cplx u_, K_, Kp_;
};

// Jacobi functions for complex argument.  Real moduli in [0, 1] use the
// real algorithm plus the imaginary-argument addition formulas; any other
// modulus goes through theta quotients at tau = i K'/K.
JacobiValues jacobi(cplx u, const Modulus& m);
JacobiValues jacobi(cplx u, double k);

// Evaluate a named quotient such as "sc" or "nd".
cplx jacobi_fn(std::string_view name, cplx u, const Modulus& m);

// Residuals of the quarter-period shift and reciprocal-modulus identities
// at (u, k), each relative to the size of the compared values.
struct IdentityReport {
  double dn_shift = 0.0;      // dn(u + K + iK') = i k' sc u
  double cn_shift = 0.0;      // cn(u + K + iK') = -i (k'/k) nc u
  double recip_dn = 0.0;      // dn(k u, 1/k) = cn(u, k)
  double recip_cn = 0.0;      // cn(k u, 1/k) = dn(u, k)
  double recip_sc = 0.0;      // k sc(u, k) = sd(k u, 1/k)
  double half_shift = 0.0;    // cn(u + K) = -k' sd u
  double max() const;
};

IdentityReport elliptic_identities(cplx u, double k);

// K'(1/k) - k K'(k) and K(1/k) - k (K(k) + i K'(k)), relative.
struct ReciprocalKReport {
  double kprime = 0.0;
  double k = 0.0;
};

ReciprocalKReport reciprocal_K(double k);

}  // namespace sgk
