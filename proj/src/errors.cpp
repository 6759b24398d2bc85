#include "sgk/errors.hpp"

#include <sstream>

namespace sgk {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SingularModulus: return "SingularModulus";
    case Errc::PoleEncountered: return "PoleEncountered";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::DegenerateSpectrum: return "DegenerateSpectrum";
    case Errc::CutsOverlap: return "CutsOverlap";
    case Errc::ZeroEnergy: return "ZeroEnergy";
    case Errc::QuadratureNoConvergence: return "QuadratureNoConvergence";
    case Errc::BranchTrackingFailure: return "BranchTrackingFailure";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::CalibrationFailed: return "CalibrationFailed";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::ThetaZero: return "ThetaZero";
    case Errc::GridTooCoarse: return "GridTooCoarse";
    case Errc::SpectraMismatch: return "SpectraMismatch";
    case Errc::IntegratorTolExceeded: return "IntegratorTolExceeded";
    case Errc::ParityUntagged: return "ParityUntagged";
    case Errc::AnalyticContinuationUnavailable: return "AnalyticContinuationUnavailable";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::ParamOutOfRange:
    case Errc::DegenerateSpectrum:
    case Errc::CutsOverlap:
    case Errc::ZeroEnergy:
    case Errc::CaseMismatch:
    case Errc::SpectraMismatch:
    case Errc::ParityUntagged:
    case Errc::GridTooCoarse:
    case Errc::SingularModulus:
    case Errc::InvalidConfig:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

static std::string pole_message(const std::string& fn, std::complex<double> p) {
  std::ostringstream os;
  os.precision(17);
  os << fn << " has a pole near u = (" << p.real() << ", " << p.imag() << ")";
  return os.str();
}

PoleError::PoleError(std::string function, std::complex<double> pole)
    : Error(Errc::PoleEncountered, pole_message(function, pole)),
      function_(std::move(function)),
      pole_(pole) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace sgk
