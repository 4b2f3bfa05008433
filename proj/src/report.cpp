#include "milnor/report.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {

Json polynomial_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (long i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).get_str());
  return Json{{"coefficients", std::move(coeffs)}, {"display", p.to_string()}};
}

Json lattice_json(const IntersectionLattice& lat) {
  Json flats = Json::array();
  for (int i = 0; i < static_cast<int>(lat.flats.size()); ++i) {
    const Flat& f = lat.flats[i];
    flats.push_back(Json{{"id", i},
                         {"hyperplanes", f.hyperplanes},
                         {"codim", f.codim},
                         {"multiplicity", f.multiplicity},
                         {"mobius", f.mobius},
                         {"dense", f.dense},
                         {"cone_point", f.codim == lat.ambient_dim + 1}});
  }
  Json j;
  j["ambient_dim"] = lat.ambient_dim;
  j["d"] = lat.d;
  j["essential"] = lat.essential;
  j["flats"] = std::move(flats);
  j["central_poincare"] = polynomial_json(central_poincare(lat));
  j["poincare"] = polynomial_json(poincare(lat));
  Json b = Json::array();
  for (int i = 0; i <= lat.ambient_dim; ++i) b.push_back(betti(lat, i));
  j["betti"] = std::move(b);
  j["euler_char"] = euler_char(lat);
  return j;
}

Json bounds_json(const IntersectionLattice& lat, const RunOptions& opts) {
  Json degrees = Json::array();
  int lo = opts.degree >= 0 ? opts.degree : 0;
  int hi = opts.degree >= 0 ? opts.degree : lat.ambient_dim;
  auto shortcut = relprime_shortcut(lat, opts.dense_only);
  for (int i = lo; i <= hi; ++i) {
    Json row;
    row["degree"] = i;
    row["admissible_orders"] = admissible_orders(lat, i, opts.dense_only);
    Json wit = Json::object();
    auto ws = witness_multisets(lat, i, opts.dense_only);
    for (int h = 0; h < lat.d; ++h) wit[std::to_string(h)] = ws[h];
    row["witnesses"] = std::move(wit);
    if (i >= 1 && i <= lat.ambient_dim - 1) {
      row["relprime_shortcut"] = static_cast<bool>(shortcut[i - 1]);
      if (opts.refined) row["refined_orders"] = refined_orders(lat, i);
    }
    degrees.push_back(std::move(row));
  }
  return Json{{"dense_only", opts.dense_only}, {"degrees", std::move(degrees)}};
}

Json zeta_json(const IntersectionLattice& lat) {
  CycloExpression z = zeta_function(lat);
  Json factors = Json::object();
  for (auto& [e, k] : z.factors) factors[std::to_string(e)] = k;
  Json ev1 = Json::array();
  for (int i = 0; i <= lat.ambient_dim; ++i) ev1.push_back(eigenvalue_one_multiplicity(lat, i));
  return Json{{"factors", std::move(factors)},
              {"display", z.to_string()},
              {"euler_char", euler_char(lat)},
              {"total_degree", z.total_degree()},
              {"eigenvalue_one_multiplicity", std::move(ev1)}};
}

Json certificate_json(const SuperabundanceCertificate& c) {
  return Json{{"k", c.k},
              {"m", c.m},
              {"degree", c.degree},
              {"exponents", c.exponents},
              {"matrix", Json{{"rows", c.rows}, {"cols", c.cols}, {"rank", c.rank}}},
              {"h0", c.h0},
              {"chi_ideal", c.chi_ideal},
              {"h2", c.h2},
              {"sigma", c.sigma}};
}

Json section_json(const SectionResult& s) {
  Json map = Json::array();
  for (auto& [sf, of] : s.flat_map) map.push_back(Json{{"section_flat", sf}, {"flat", of}});
  return Json{{"arrangement", arrangement_json(s.arrangement)},
              {"seed", s.seed},
              {"attempts", s.attempts},
              {"coefficient_bound", s.coefficient_bound},
              {"flat_map", std::move(map)}};
}

Json spectrum_result_json(const SpectrumResult& r, const IntersectionLattice& lat) {
  Json j;
  j["d"] = r.spectrum.order;
  j["mult"] = r.spectrum.mult;
  Json factored = Json::array();
  for (auto& [e, power] : cyclotomic_multiplicities(r.spectrum))
    factored.push_back(Json{{"cyclotomic_order", e}, {"power", power}});
  j["charpoly_factored"] = std::move(factored);
  j["charpoly"] = factored_string(r.spectrum);
  j["det_form"] = det_form(r.spectrum).to_string();
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = std::move(certs);

  bool triple_ok = lat.d >= 1;
  for (const auto& f : lat.flats) triple_ok = triple_ok && (f.codim != 2 || f.multiplicity <= 3);
  if (triple_ok) {
    TriplePointModule m = triple_point_module(lat, r.spectrum);
    j["triple_point_module"] = Json{{"s", m.s}, {"decomposition", m.decomposition}};
  }
  return j;
}

void spectrum_checks(const SpectrumResult& r, const IntersectionLattice& lat, Json& checks) {
  // conjugation symmetry
  bool sym = true;
  long d = r.spectrum.order;
  for (long j = 1; j < d; ++j) sym = sym && r.spectrum.mult[j] == r.spectrum.mult[d - j];
  checks["conjugation_symmetry"] = sym ? "pass" : "fail";

  // eigenvalue-1 multiplicity = b_1 of the complement
  checks["eigenvalue_one_is_b1"] = r.spectrum.mult[0] == betti(lat, 1) ? "pass" : "fail";

  // zeta identity: (1-t^d)^chi * det(1-tT1) / (1-t) divides exactly
  try {
    reconstruct_top_charpoly(lat, det_form(r.spectrum));
    checks["zeta_reconstruction_exact"] = "pass";
  } catch (const Error&) {
    checks["zeta_reconstruction_exact"] = "fail";
  }

  // orders of realized eigenvalues lie in the degree-1 admissible orders
  auto adm = admissible_orders(lat, 1, true);
  bool sound = true;
  for (long j = 0; j < d; ++j) {
    if (r.spectrum.mult[j] == 0) continue;
    long order = d / std::gcd(j, d);
    sound = sound && std::find(adm.begin(), adm.end(), order) != adm.end();
  }
  checks["spectrum_orders_admissible"] = sound ? "pass" : "fail";
}

}  // namespace milnor
