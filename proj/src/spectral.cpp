#include "sgk/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "sgk/errors.hpp"

namespace sgk {

namespace {

constexpr double kDegenerateTol = 1e-10;

void check_degenerate(const std::array<cplx, 4>& E) {
  double big = 0.0;
  for (auto e : E) big = std::max(big, std::abs(e));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(E[i] - E[j]) <= kDegenerateTol * big)
        fail(Errc::DegenerateSpectrum, "branch points collide");
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Case case_of(Family f) {
  return (f == Family::BreatherA || f == Family::KinkA) ? Case::A : Case::B;
}

Kind kind_of(Family f) {
  return (f == Family::KinkA || f == Family::KinkB) ? Kind::Kink : Kind::Breather;
}

Family family_of(Case c, Kind k) {
  if (c == Case::A) return k == Kind::Kink ? Family::KinkA : Family::BreatherA;
  return k == Kind::Kink ? Family::KinkB : Family::BreatherB;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::BreatherA: return "breather-a";
    case Family::KinkA: return "kink-a";
    case Family::KinkB: return "kink-b";
    case Family::BreatherB: return "breather-b";
  }
  return "";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::BreatherA, Family::KinkA, Family::KinkB, Family::BreatherB})
    if (family_name(f) == name) return f;
  fail(Errc::ParamOutOfRange, "unknown family '" + std::string(name) + "'");
}

cplx involution(cplx E) {
  if (E == 0.0) fail(Errc::ZeroEnergy, "E = 0 has no image");
  return SPECTRAL_SCALE / E;
}

cplx z_map(cplx E) {
  if (E == 0.0) fail(Errc::ZeroEnergy, "z(E) undefined at E = 0");
  return 0.5 * (E + SPECTRAL_SCALE / E);
}

cplx R_squared(const Spectrum& s, cplx E) {
  cplx p = E;
  for (auto e : s.E) p *= (E - e);
  return p;
}

Spectrum make_case_a_breather(double r, double phi) {
  if (!(r > 0.0 && r <= 1.0 / 16.0))
    fail(Errc::ParamOutOfRange, "breather-a needs 0 < r < 1/16, got r = " + num(r));
  if (!(phi > 0.0 && phi < kPi))
    fail(Errc::ParamOutOfRange, "breather-a needs 0 < phi < pi, got phi = " + num(phi));
  if (r == 1.0 / 16.0) fail(Errc::DegenerateSpectrum, "r = 1/16 puts all points on one circle");
  Spectrum s;
  s.family = Family::BreatherA;
  s.params.r = r;
  s.params.phi = phi;
  cplx e = std::polar(1.0, phi);
  double R = SPECTRAL_SCALE / r;
  s.E = {r * e, r * std::conj(e), R * e, R * std::conj(e)};
  check_degenerate(s.E);
  return s;
}

Spectrum make_case_a_kink(double r, double eta) {
  if (!(r > 0.0 && r < 1.0 / 16.0))
    fail(Errc::ParamOutOfRange, "kink-a needs 0 < r < 1/16, got r = " + num(r));
  if (!(eta > 0.0)) fail(Errc::ParamOutOfRange, "kink-a needs eta > 0, got eta = " + num(eta));
  double R = SPECTRAL_SCALE / r;
  double inner = r * std::exp(eta), outer = R * std::exp(-eta);
  if (inner >= outer)
    fail(Errc::CutsOverlap, "r e^eta >= e^-eta/(256 r): the a-cuts overlap (Case (b) topology)");
  Spectrum s;
  s.family = Family::KinkA;
  s.params.r = r;
  s.params.eta = eta;
  s.E = {-r * std::exp(-eta), -inner, -outer, -R * std::exp(eta)};
  check_degenerate(s.E);
  return s;
}

Spectrum make_case_b_kink(double eta1, double eta2) {
  if (!(eta2 > 0.0 && eta1 > eta2))
    fail(Errc::ParamOutOfRange, "kink-b needs eta1 > eta2 > 0, got eta1 = " + num(eta1) +
                                    ", eta2 = " + num(eta2));
  Spectrum s;
  s.family = Family::KinkB;
  s.params.eta1 = eta1;
  s.params.eta2 = eta2;
  const double a = 1.0 / 16.0;
  s.E = {-a * std::exp(-eta1), -a * std::exp(-eta2), -a * std::exp(eta2), -a * std::exp(eta1)};
  check_degenerate(s.E);
  return s;
}

Spectrum make_case_b_breather(double phi1, double phi2) {
  if (!(phi1 > 0.0 && phi1 < phi2 && phi2 < kPi))
    fail(Errc::ParamOutOfRange, "breather-b needs 0 < phi1 < phi2 < pi, got phi1 = " +
                                    num(phi1) + ", phi2 = " + num(phi2));
  Spectrum s;
  s.family = Family::BreatherB;
  s.params.phi1 = phi1;
  s.params.phi2 = phi2;
  const double a = 1.0 / 16.0;
  s.E = {a * std::polar(1.0, phi1), a * std::polar(1.0, phi2), a * std::polar(1.0, -phi2),
         a * std::polar(1.0, -phi1)};
  check_degenerate(s.E);
  return s;
}

Spectrum make_spectrum(Family f, const SpectrumParams& p) {
  switch (f) {
    case Family::BreatherA: return make_case_a_breather(p.r, p.phi);
    case Family::KinkA: return make_case_a_kink(p.r, p.eta);
    case Family::KinkB: return make_case_b_kink(p.eta1, p.eta2);
    case Family::BreatherB: return make_case_b_breather(p.phi1, p.phi2);
  }
  fail(Errc::ParamOutOfRange, "unknown family");
}

Spectrum make_case3(cplx E1) {
  double r = std::abs(E1);
  if (r > 1.0 / 16.0) r = SPECTRAL_SCALE / r;
  double phi = std::abs(std::arg(E1));
  return make_case_a_breather(r, phi);
}

double symmetry_defect(const Spectrum& s) {
  double worst = 0.0;
  for (auto e : s.E) {
    cplx img = involution(e);
    double best = 1e300;
    for (auto f : s.E) best = std::min(best, std::abs(img - f) / std::abs(f));
    worst = std::max(worst, best);
  }
  return worst;
}

void validate(const Spectrum& s) {
  check_degenerate(s.E);
  if (symmetry_defect(s) > 1e-12)
    fail(Errc::ParamOutOfRange, "spectrum is not closed under E -> 1/(256E)");
  if (s.kind() == Kind::Kink) {
    for (int j = 0; j < 4; ++j)
      if (s.E[j].imag() != 0.0 || !(s.E[j].real() < 0.0))
        fail(Errc::ParamOutOfRange, "kink branch points must be real negative");
    if (!(s.E[3].real() < s.E[2].real() && s.E[2].real() < s.E[1].real() &&
          s.E[1].real() < s.E[0].real()))
      fail(Errc::ParamOutOfRange, "kink branch points must satisfy E4 < E3 < E2 < E1");
  } else {
    for (auto e : s.E) {
      bool paired = false;
      for (auto f : s.E)
        if (std::abs(std::conj(e) - f) <= 1e-12 * std::abs(e)) paired = true;
      if (!paired || e.imag() == 0.0)
        fail(Errc::ParamOutOfRange, "breather branch points must form conjugate pairs");
    }
  }
}

SpectrumParams matched_case_b(double r, double eta) {
  Spectrum a = make_case_a_kink(r, eta);
  (void)a;
  SpectrumParams p;
  double L = std::log(1.0 / (16.0 * r));
  p.eta1 = eta + L;
  p.eta2 = L - eta;
  if (!(p.eta2 > 0.0)) fail(Errc::CutsOverlap, "no Case (b) partner for these parameters");
  return p;
}

SpectrumParams matched_case_a(double eta1, double eta2) {
  Spectrum b = make_case_b_kink(eta1, eta2);
  (void)b;
  SpectrumParams p;
  p.r = std::exp(-0.5 * (eta1 + eta2)) / 16.0;
  p.eta = 0.5 * (eta1 - eta2);
  return p;
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  double worst = 0.0;
  for (auto e : a.E) {
    double best = 1e300;
    for (auto f : b.E) best = std::min(best, std::abs(e - f) / std::max(std::abs(e), std::abs(f)));
    worst = std::max(worst, best);
  }
  for (auto e : b.E) {
    double best = 1e300;
    for (auto f : a.E) best = std::min(best, std::abs(e - f) / std::max(std::abs(e), std::abs(f)));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace sgk
