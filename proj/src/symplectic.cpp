#include "sgk/symplectic.hpp"

#include <cmath>

#include "sgk/errors.hpp"

namespace sgk {

namespace {

// Exact integer determinant by cofactor expansion.
long long det_exact(const Mat4i& m) {
  auto det3 = [&](int skip_col) {
    int cols[3], n = 0;
    for (int j = 0; j < 4; ++j)
      if (j != skip_col) cols[n++] = j;
    auto e = [&](int r, int c) { return m(r, cols[c]); };
    return e(1, 0) * (e(2, 1) * e(3, 2) - e(2, 2) * e(3, 1)) -
           e(1, 1) * (e(2, 0) * e(3, 2) - e(2, 2) * e(3, 0)) +
           e(1, 2) * (e(2, 0) * e(3, 1) - e(2, 1) * e(3, 0));
  };
  long long d = 0;
  for (int j = 0; j < 4; ++j) d += (j % 2 ? -1 : 1) * m(0, j) * det3(j);
  return d;
}

Sp4Element from_rows(std::initializer_list<long long> v) {
  Mat4i m;
  auto it = v.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  return Sp4Element::from_matrix(m);
}

}  // namespace

Sp4Element Sp4Element::identity() {
  return {Mat2i::Identity(), Mat2i::Zero(), Mat2i::Zero(), Mat2i::Identity()};
}

Sp4Element Sp4Element::from_matrix(const Mat4i& m) {
  return {m.block<2, 2>(0, 0), m.block<2, 2>(0, 2), m.block<2, 2>(2, 0), m.block<2, 2>(2, 2)};
}

Mat4i Sp4Element::matrix() const {
  Mat4i m;
  m << a, b, c, d;
  return m;
}

long long Sp4Element::block_det() const { return det_exact(matrix()); }

Mat4i standard_J() {
  Mat4i J = Mat4i::Zero();
  J.block<2, 2>(0, 2) = Mat2i::Identity();
  J.block<2, 2>(2, 0) = -Mat2i::Identity();
  return J;
}

Mat4i Sp4Element::symplectic_defect() const {
  Mat4i m = matrix();
  return m * standard_J() * m.transpose() - standard_J();
}

bool Sp4Element::operator==(const Sp4Element& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

Sp4Element compose(const Sp4Element& s1, const Sp4Element& s2) {
  return {s1.a * s2.a + s1.b * s2.c, s1.a * s2.b + s1.b * s2.d,
          s1.c * s2.a + s1.d * s2.c, s1.c * s2.b + s1.d * s2.d};
}

ActResult act(const Sp4Element& s, const Mat2c& B) {
  Mat2c a = s.a.cast<double>().cast<cplx>(), b = s.b.cast<double>().cast<cplx>();
  Mat2c c = s.c.cast<double>().cast<cplx>(), d = s.d.cast<double>().cast<cplx>();
  Mat2c num = a * B + b, den = c * B + d;
  Eigen::JacobiSVD<Mat2c> svd(den);
  double smax = svd.singularValues()(0), smin = svd.singularValues()(1);
  if (!(smin > 0.0) || smax / smin > 1e12)
    fail(Errc::SingularDenominator, "cB + d is singular");
  Mat2c r = num * den.inverse();
  ActResult out;
  out.symmetry_defect = std::abs(r(0, 1) - r(1, 0)) / std::max(1.0, r.norm());
  out.B = 0.5 * (r + r.transpose());
  return out;
}

const SymplecticConstants& constants() {
  static const SymplecticConstants k = [] {
    SymplecticConstants s;
    s.sigma_c = from_rows({2, -1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 2});
    s.sigma_a = from_rows({0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, -1, -1, -1, 0, 0});
    s.sigma_b = compose(s.sigma_a, s.sigma_c);
    return s;
  }();
  return k;
}

Mat2c B_case_a(cplx tp, cplx tm) {
  Mat2c B;
  B << 0.5 * (tp + tm), 0.5 * (tp - tm), 0.5 * (tp - tm), 0.5 * (tp + tm);
  return B;
}

Mat2c B_case_b(cplx tp, cplx tm) {
  Mat2c B;
  B << tp, tp, tp, tp + tm;
  return B;
}

CharacteristicReport characteristic_shift(const Vec2d& alpha, const Vec2d& beta, const Vec2c& l,
                                          cplx B11, cplx B22) {
  if (!(B11.imag() > 0.0 && B22.imag() > 0.0))
    fail(Errc::ParamOutOfRange, "diagonal entries need Im > 0");
  Mat2c D, O;
  D << B11, 0.0, 0.0, B22;
  O << B11, 1.0, 1.0, B22;
  CharacteristicReport r;
  r.lhs = riemann_theta_char(alpha, beta, l, D);
  Vec2d beta2(beta(0) - alpha(1), beta(1) - alpha(0));
  r.rhs = std::exp(2.0 * kI * kPi * alpha(0) * alpha(1)) * riemann_theta_char(alpha, beta2, l, O);
  r.residual = std::abs(r.lhs - r.rhs) / std::max(1.0, std::abs(r.lhs));
  return r;
}

DiagonalForm diagonalized_form(const Mat2c& B) {
  Mat2c twice = 2.0 * B;
  cplx off = twice(0, 1);
  double nearest = std::round(off.real());
  DiagonalForm f;
  f.d1 = twice(0, 0);
  f.d2 = twice(1, 1);
  f.off_diagonal_defect = std::abs(off - nearest) + std::abs(twice(1, 0) - nearest);
  return f;
}

}  // namespace sgk
