#include <sstream>

#include "milnor/arrangement.hpp"
#include "milnor/lattice.hpp"

namespace milnor {

namespace {

Arrangement braid(long n) {
  if (n < 1) fail(Errc::unsupported_builtin, "braid:n needs n >= 1");
  // The intersection lattice is the partition lattice of n+1 labels, whose
  // size (the Bell number) makes n > 6 impractical to analyze exactly.
  if (n > 6) fail(Errc::unsupported_builtin, "braid:n supported up to n=6");
  Arrangement a;
  a.dim = static_cast<int>(n);
  for (long i = 0; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) {
      LinearForm<Rat> f;
      f.coeffs.assign(n + 1, Rat(0));
      f.coeffs[i] = 1;
      f.coeffs[j] = -1;
      a.hyperplanes.push_back(std::move(f));
    }
  canonicalize_and_validate(a);
  return a;
}

// d hyperplanes tangent to the moment curve: the coefficient vectors
// (1, t, ..., t^n) at distinct nodes have every minor Vandermonde, hence
// nonzero, so every intersection is simple normal crossing.  The lattice
// check below is a tripwire for that argument, with a node shift retried
// in case it ever fires.
Arrangement generic(long n, long d) {
  if (n < 1 || d < 1) fail(Errc::unsupported_builtin, "generic:n,d needs n >= 1, d >= 1");
  if (n > 6 || d > 64) fail(Errc::unsupported_builtin, "generic:n,d supported up to n=6, d=64");
  for (long shift = 0; shift < 8; ++shift) {
    Arrangement a;
    a.dim = static_cast<int>(n);
    for (long i = 1; i <= d; ++i) {
      LinearForm<Rat> f;
      Rat t(i + shift * d);
      Rat power(1);
      for (long j = 0; j <= n; ++j) {
        f.coeffs.push_back(power);
        power *= t;
      }
      a.hyperplanes.push_back(std::move(f));
    }
    canonicalize_and_validate(a);
    IntersectionLattice lat = build_lattice(a);
    bool snc = true;
    for (const auto& fl : lat.flats)
      if (fl.codim <= a.dim) snc = snc && fl.multiplicity == fl.codim;
    if (snc) return a;
  }
  fail(Errc::genericity_failure, "could not realize a simple-normal-crossing arrangement");
}

Arrangement ceva_rational(long q) {
  // lines x^q - y^q, y^q - z^q, x^q - z^q; all factors rational iff q <= 2
  if (q < 1 || q > 2)
    fail(Errc::unsupported_builtin,
         "ceva:q is rational only for q in {1,2}; ceva:3 runs over Q(w) (dual Hesse)");
  Arrangement a;
  a.dim = 2;
  auto add = [&](long cx, long cy, long cz) {
    LinearForm<Rat> f;
    f.coeffs = {Rat(cx), Rat(cy), Rat(cz)};
    a.hyperplanes.push_back(std::move(f));
  };
  for (long s = 0; s < q; ++s) {
    long sign = (s == 0) ? -1 : 1;
    add(1, sign, 0);
  }
  for (long s = 0; s < q; ++s) {
    long sign = (s == 0) ? -1 : 1;
    add(0, 1, sign);
  }
  for (long s = 0; s < q; ++s) {
    long sign = (s == 0) ? -1 : 1;
    add(1, 0, sign);
  }
  canonicalize_and_validate(a);
  return a;
}

}  // namespace

BasicArrangement<Cyc3> ceva3() {
  // factors of (x^3-y^3)(y^3-z^3)(x^3-z^3): x - w^s y, y - w^s z, x - w^s z
  BasicArrangement<Cyc3> a;
  a.dim = 2;
  const Cyc3 roots[3] = {Cyc3(1), Cyc3::w(), Cyc3::w() * Cyc3::w()};
  auto add = [&](int xi, int yi, const Cyc3& r) {
    LinearForm<Cyc3> f;
    f.coeffs.assign(3, Cyc3(0));
    f.coeffs[xi] = Cyc3(1);
    f.coeffs[yi] = -r;
    a.hyperplanes.push_back(std::move(f));
  };
  for (const Cyc3& r : roots) add(0, 1, r);
  for (const Cyc3& r : roots) add(1, 2, r);
  for (const Cyc3& r : roots) add(0, 2, r);
  canonicalize_and_validate(a);

  // Assert the dual-Hesse lattice signature: 12 triple points, nothing else.
  IntersectionLattice lat = build_lattice(a);
  int triples = 0;
  for (const auto& f : lat.flats) {
    if (f.codim != 2) continue;
    if (f.multiplicity != 3)
      fail(Errc::internal_inconsistency, "dual-Hesse model has a vertex of multiplicity " +
                                             std::to_string(f.multiplicity));
    ++triples;
  }
  if (triples != 12)
    fail(Errc::internal_inconsistency,
         "dual-Hesse model has " + std::to_string(triples) + " triple points, expected 12");
  return a;
}

Arrangement builtin_arrangement(const std::string& name, const std::vector<long>& params) {
  if (name == "braid") {
    if (params.size() != 1) fail(Errc::unsupported_builtin, "braid takes one parameter: braid:n");
    return braid(params[0]);
  }
  if (name == "generic") {
    if (params.size() != 2)
      fail(Errc::unsupported_builtin, "generic takes two parameters: generic:n,d");
    return generic(params[0], params[1]);
  }
  if (name == "ceva") {
    if (params.size() != 1) fail(Errc::unsupported_builtin, "ceva takes one parameter: ceva:q");
    return ceva_rational(params[0]);
  }
  fail(Errc::unsupported_builtin, "unknown builtin '" + name + "' (know braid, generic, ceva)");
}

Arrangement builtin_arrangement(const std::string& spec) {
  std::string name = spec;
  std::vector<long> params;
  std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        params.push_back(v);
      } catch (...) {
        fail(Errc::unsupported_builtin, "bad builtin parameter '" + tok + "' in '" + spec + "'");
      }
    }
  }
  return builtin_arrangement(name, params);
}

bool builtin_is_cyc3(const std::string& spec) { return spec == "ceva:3"; }

}  // namespace milnor
