#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace sgk::test {

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

}  // namespace sgk::test
