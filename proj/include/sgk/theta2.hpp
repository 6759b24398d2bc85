#pragma once

#include <Eigen/Dense>

#include "sgk/elliptic.hpp"

namespace sgk {

using Mat2c = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;
using Vec2d = Eigen::Vector2d;

// Genus-2 Riemann theta  sum_k exp(i pi k^T B k + 2 pi i l.k),  Im B > 0.
cplx riemann_theta(const Vec2c& l, const Mat2c& B);

// With characteristic [alpha; beta]:
//   sum_k exp(i pi (k+alpha)^T B (k+alpha) + 2 pi i (k+alpha).(l+beta))
cplx riemann_theta_char(const Vec2d& alpha, const Vec2d& beta, const Vec2c& l,
                        const Mat2c& B);

// Throws ParamOutOfRange unless B is symmetric with positive definite Im B.
void check_period_matrix(const Mat2c& B);

}  // namespace sgk
