#pragma once

#include <array>
#include <string>
#include <string_view>

#include "sgk/elliptic.hpp"

namespace sgk {

inline constexpr double SPECTRAL_SCALE = 1.0 / 256.0;

enum class Case { A, B };
enum class Kind { Kink, Breather };
enum class Family { BreatherA, KinkA, KinkB, BreatherB };

Case case_of(Family f);
Kind kind_of(Family f);
Family family_of(Case c, Kind k);
std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct SpectrumParams {
  double r = 0.0, phi = 0.0, eta = 0.0;
  double eta1 = 0.0, eta2 = 0.0, phi1 = 0.0, phi2 = 0.0;
};

struct Spectrum {
  Family family = Family::KinkA;
  SpectrumParams params;
  std::array<cplx, 4> E;  // E1..E4

  Case case_tag() const { return case_of(family); }
  Kind kind() const { return kind_of(family); }
};

Spectrum make_case_a_breather(double r, double phi);
Spectrum make_case_a_kink(double r, double eta);
Spectrum make_case_b_kink(double eta1, double eta2);
Spectrum make_case_b_breather(double phi1, double phi2);
Spectrum make_spectrum(Family f, const SpectrumParams& p);

// A point E1 with partner E2 = 1/(256 conj(E1)) spans the same set as the
// Case (a) breather at r = |E1|, phi = arg E1 (with E1 inside |E| < 1/16).
Spectrum make_case3(cplx E1);

// E -> 1/(256 E)
cplx involution(cplx E);
// z(E) = (E + 1/(256 E)) / 2
cplx z_map(cplx E);
// E * prod (E - Ej)
cplx R_squared(const Spectrum& s, cplx E);

// Symmetry closure, pairing/ordering and degeneracy; throws on violation.
void validate(const Spectrum& s);
double symmetry_defect(const Spectrum& s);

// Case (b) kink parameters sharing the branch points of the Case (a) kink (r, eta).
SpectrumParams matched_case_b(double r, double eta);
SpectrumParams matched_case_a(double eta1, double eta2);

// Maximum relative distance between the two branch-point sets.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

}  // namespace sgk
