#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgk {

enum class Errc {
  SingularModulus,
  PoleEncountered,
  NonConvergent,
  ParamOutOfRange,
  DegenerateSpectrum,
  CutsOverlap,
  ZeroEnergy,
  QuadratureNoConvergence,
  BranchTrackingFailure,
  CaseMismatch,
  CalibrationFailed,
  SingularDenominator,
  ThetaZero,
  GridTooCoarse,
  SpectraMismatch,
  IntegratorTolExceeded,
  ParityUntagged,
  AnalyticContinuationUnavailable,
  InvalidConfig
};

std::string_view errc_name(Errc code);

// Errors caused by the caller's parameters rather than by the numerics.
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

class PoleError : public Error {
 public:
  PoleError(std::string function, std::complex<double> pole);
  const std::string& function() const noexcept { return function_; }
  std::complex<double> pole() const noexcept { return pole_; }

 private:
  std::string function_;
  std::complex<double> pole_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace sgk
