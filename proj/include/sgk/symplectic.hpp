#pragma once

#include <Eigen/Dense>

#include "sgk/theta2.hpp"

namespace sgk {

using Mat2i = Eigen::Matrix<long long, 2, 2>;
using Mat4i = Eigen::Matrix<long long, 4, 4>;

// Integer 4x4 matrix in 2x2 blocks (a b; c d), acting on Riemann matrices by
// B -> (aB + b)(cB + d)^-1.  Blocks act on (b-cycles, a-cycles) stacked in
// that order:  b' = a b + b a,  a' = c b + d a.
struct Sp4Element {
  Mat2i a, b, c, d;

  static Sp4Element identity();
  static Sp4Element from_matrix(const Mat4i& m);
  Mat4i matrix() const;
  long long block_det() const;
  // sigma J sigma^T - J, exact
  Mat4i symplectic_defect() const;
  bool operator==(const Sp4Element& o) const;
};

Mat4i standard_J();

Sp4Element compose(const Sp4Element& s1, const Sp4Element& s2);

struct ActResult {
  Mat2c B;
  double symmetry_defect = 0.0;
};

// Throws SingularDenominator when cB + d is numerically singular.
ActResult act(const Sp4Element& s, const Mat2c& B);

struct SymplecticConstants {
  Sp4Element sigma_a, sigma_c, sigma_b;
};

const SymplecticConstants& constants();

// Case (a) and Case (b) kink/breather period matrices in terms of tau+-.
Mat2c B_case_a(cplx tau_plus, cplx tau_minus);
Mat2c B_case_b(cplx tau_plus, cplx tau_minus);

// Theta[a;b](l; diag(B11, B22)) against
// exp(2 pi i a1 a2) Theta[a1, a2; b1 - a2, b2 - a1](l; [[B11, 1], [1, B22]]).
struct CharacteristicReport {
  cplx lhs, rhs;
  double residual = 0.0;
};

CharacteristicReport characteristic_shift(const Vec2d& alpha, const Vec2d& beta, const Vec2c& l,
                                          cplx B11, cplx B22);

// 2B with an integer off-diagonal removed (the characteristic identity
// absorbs it); returns the diagonal and the removed integer's distance.
struct DiagonalForm {
  cplx d1, d2;
  double off_diagonal_defect = 0.0;
};

DiagonalForm diagonalized_form(const Mat2c& B);

}  // namespace sgk
