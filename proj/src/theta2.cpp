#include "sgk/theta2.hpp"

#include <cmath>

#include "sgk/errors.hpp"

namespace sgk {

void check_period_matrix(const Mat2c& B) {
  if (std::abs(B(0, 1) - B(1, 0)) > 1e-12 * (1.0 + B.norm()))
    fail(Errc::ParamOutOfRange, "period matrix is not symmetric");
  Eigen::Matrix2d Y = B.imag();
  if (!(Y(0, 0) > 0.0 && Y.determinant() > 0.0))
    fail(Errc::ParamOutOfRange, "imaginary part of the period matrix is not positive definite");
}

cplx riemann_theta_char(const Vec2d& alpha, const Vec2d& beta, const Vec2c& l,
                        const Mat2c& B) {
  check_period_matrix(B);
  Eigen::Matrix2d Y = B.imag();

  // Shift l by a lattice vector B m so that the dominant terms sit near k = 0:
  //   Theta[a;b](l + B m) = exp(-i pi m^T B m - 2 pi i m.(l + b)) Theta[a;b](l)
  Vec2d c = -Y.inverse() * l.imag();
  Eigen::Vector2d m(std::round(c(0)), std::round(c(1)));
  Vec2c mc = m.cast<cplx>();
  Vec2c lr = l - B * mc;
  Vec2c lb = lr + beta.cast<cplx>();
  // (transpose products: Eigen's dot() would conjugate)
  cplx log_factor = -kI * kPi * (mc.transpose() * B * mc)(0, 0) -
               2.0 * kI * kPi * (mc.transpose() * lb)(0, 0);

  auto exponent = [&](int k1, int k2) {
    cplx n1 = k1 + alpha(0), n2 = k2 + alpha(1);
    cplx q = B(0, 0) * n1 * n1 + 2.0 * B(0, 1) * n1 * n2 + B(1, 1) * n2 * n2;
    return kI * kPi * (q + 2.0 * (n1 * lb(0) + n2 * lb(1)));
  };

  // Sum over square shells |k|_inf = r until a shell is negligible.
  cplx sum = std::exp(exponent(0, 0));
  double scale = std::abs(sum);
  int quiet = 0;
  for (int r = 1; r < 2000; ++r) {
    cplx shell = 0.0;
    double mag = 0.0;
    for (int j = -r; j <= r; ++j) {
      const int pts[4][2] = {{r, j}, {-r, j}, {j, r}, {j, -r}};
      for (int p = 0; p < 4; ++p) {
        // corners appear twice in the list above
        if (p >= 2 && (j == r || j == -r)) continue;
        cplx t = std::exp(exponent(pts[p][0], pts[p][1]));
        shell += t;
        mag += std::abs(t);
      }
    }
    sum += shell;
    scale += mag;
    if (mag <= 1e-17 * scale) {
      if (++quiet >= 2) return sum * std::exp(log_factor);
    } else {
      quiet = 0;
    }
  }
  fail(Errc::NonConvergent, "genus-2 theta series did not converge");
}

cplx riemann_theta(const Vec2c& l, const Mat2c& B) {
  return riemann_theta_char(Vec2d::Zero(), Vec2d::Zero(), l, B);
}

}  // namespace sgk
