#pragma once

#include <json.hpp>

#include <type_traits>

#include "milnor/bounds.hpp"
#include "milnor/charpoly.hpp"
#include "milnor/lattice.hpp"
#include "milnor/zeta.hpp"

namespace milnor {

using Json = nlohmann::ordered_json;

inline const char* version_string() { return "0.1.0"; }

struct RunOptions {
  bool dense_only = true;           // bounds: restrict witnesses to dense flats
  bool refined = false;             // bounds: include the refined orders
  int degree = -1;                  // bounds: single degree, or -1 for all
  ExponentConvention convention = ExponentConvention::reconciled;
  bool use_section = false;         // charpoly: reduce to a plane section when n > 2
  std::uint64_t seed = 0;
  Exec exec = Exec::parallel;
};

template <class K>
Json arrangement_json(const BasicArrangement<K>& a) {
  Json forms = Json::array();
  for (const auto& h : a.hyperplanes) {
    Json row = Json::array();
    for (const K& c : h.coeffs) row.push_back(to_string(c));
    forms.push_back(std::move(row));
  }
  return Json{{"dim", a.dim}, {"d", a.d()}, {"hyperplanes", std::move(forms)}};
}

Json polynomial_json(const IntPolynomial& p);  // coefficient strings, ascending
Json lattice_json(const IntersectionLattice& lat);
Json bounds_json(const IntersectionLattice& lat, const RunOptions& opts);
Json zeta_json(const IntersectionLattice& lat);
Json certificate_json(const SuperabundanceCertificate& c);
Json section_json(const SectionResult& s);

// JSON for a computed H_1 spectrum (factored charpoly, certificates, module
// decomposition when every vertex is double or triple).
Json spectrum_result_json(const SpectrumResult& r, const IntersectionLattice& lat);

// Cross-checks requiring the spectrum: exact zeta reconstruction of the top
// charpoly, conjugation symmetry, eigenvalue orders inside the degree-1
// bounds.  Appends pass/fail entries to `checks`.
void spectrum_checks(const SpectrumResult& r, const IntersectionLattice& lat, Json& checks);

template <class K>
Json spectrum_json(const BasicArrangement<K>& a, const IntersectionLattice& lat,
                   const RunOptions& opts) {
  SpectrumResult r = monodromy_spectrum(a, lat, opts.convention, opts.exec);
  return spectrum_result_json(r, lat);
}

// Everything applicable to the input, plus embedded cross-checks.  For
// ambient dimension > 2 the monodromy spectrum is reported for a generic
// plane section (seeded, hence reproducible).
template <class K>
Json full_report(const BasicArrangement<K>& a, const RunOptions& opts) {
  IntersectionLattice lat = analyze(a, opts.exec);
  Json j;
  j["version"] = version_string();
  j["arrangement"] = arrangement_json(a);
  j["lattice"] = lattice_json(lat);
  j["bounds"] = bounds_json(lat, opts);
  j["zeta"] = zeta_json(lat);

  Json checks = Json::object();
  checks["euler_strata_agreement"] = euler_char(lat) == euler_char_by_strata(lat) ? "pass" : "fail";

  if (a.dim == 2) {
    SpectrumResult r = monodromy_spectrum(a, lat, opts.convention, opts.exec);
    j["charpoly"] = spectrum_result_json(r, lat);
    spectrum_checks(r, lat, checks);
  } else if constexpr (std::is_same_v<K, Rat>) {
    SectionResult sec = generic_section(a, 2, opts.seed);
    IntersectionLattice slat = analyze(sec.arrangement, opts.exec);
    j["section"] = section_json(sec);
    SpectrumResult r = monodromy_spectrum(sec.arrangement, slat, opts.convention, opts.exec);
    j["charpoly_of_section"] = spectrum_result_json(r, slat);
    spectrum_checks(r, slat, checks);
  }
  j["cross_checks"] = std::move(checks);
  return j;
}

}  // namespace milnor
