#pragma once

#include <istream>
#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/numeric.hpp"

namespace milnor {

// Scale a coefficient vector to its canonical representative.
// Over Q: clear denominators, divide by the content, make the first nonzero
// entry positive — an all-integer primitive vector.  Over other fields:
// divide by the first nonzero entry.  Proportional vectors canonicalize to
// equal vectors in both cases.
void canonicalize_coeffs(std::vector<Rat>& c);
void canonicalize_coeffs(std::vector<Cyc3>& c);

// A hyperplane of P^n given by a nonzero linear form in n+1 coordinates,
// stored in canonical form.
template <class K>
struct LinearForm {
  std::vector<K> coeffs;

  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
};

template <class K>
struct BasicArrangement {
  int dim = 0;                            // ambient projective dimension n
  std::vector<LinearForm<K>> hyperplanes;  // input order preserved

  int d() const { return static_cast<int>(hyperplanes.size()); }
};

using Arrangement = BasicArrangement<Rat>;

// Canonicalize all forms in place and check the arrangement invariants:
// n >= 1, every form nonzero of length n+1, no two forms proportional.
template <class K>
void canonicalize_and_validate(BasicArrangement<K>& a) {
  if (a.dim < 1) fail(Errc::invalid_dimension, "ambient dimension must be >= 1");
  for (auto& h : a.hyperplanes) {
    if (static_cast<int>(h.coeffs.size()) != a.dim + 1)
      fail(Errc::dimension_mismatch, "form has " + std::to_string(h.coeffs.size()) +
                                         " coefficients, expected " + std::to_string(a.dim + 1));
    bool nonzero = false;
    for (const K& c : h.coeffs) nonzero = nonzero || !is_zero(c);
    if (!nonzero) fail(Errc::zero_form, "zero linear form");
    canonicalize_coeffs(h.coeffs);
  }
  for (int i = 0; i < a.d(); ++i)
    for (int j = i + 1; j < a.d(); ++j)
      if (a.hyperplanes[i] == a.hyperplanes[j])
        fail(Errc::duplicate_hyperplane,
             "hyperplanes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

// --- the plain-text format -------------------------------------------------
// '#' starts a comment; first non-blank line is "dim n"; each further
// non-blank line lists n+1 whitespace-separated rationals ("p/q" or "p").
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement(const std::string& text);
Arrangement load_arrangement_file(const std::string& path);

// Canonical serialization: integer coefficients, one hyperplane per line.
// parse(serialize(A)) == A for canonical A.
std::string serialize_arrangement(const Arrangement& a);

// Named families: braid:n, generic:n,d, ceva:q (q in {1,2}).
// ceva:3 is not constructible over Q; see ceva3() below.
Arrangement builtin_arrangement(const std::string& name, const std::vector<long>& params);
Arrangement builtin_arrangement(const std::string& spec);  // "braid:3", "generic:2,5"

// The dual-Hesse arrangement (9 lines, 12 triple points).  No rational or
// real model exists (every real non-pencil line arrangement has a double
// point), so this builtin lives over Q(w), w^2 + w + 1 = 0.
BasicArrangement<Cyc3> ceva3();

// True when `spec` names the one builtin that needs the Q(w) scalar.
bool builtin_is_cyc3(const std::string& spec);

// Apply an invertible linear substitution x -> M x to every form
// (a projective change of coordinates); used by invariance tests.
template <class K>
BasicArrangement<K> substitute(const BasicArrangement<K>& a,
                               const std::vector<std::vector<K>>& m) {
  BasicArrangement<K> out;
  out.dim = a.dim;
  int n = a.dim + 1;
  for (const auto& h : a.hyperplanes) {
    LinearForm<K> f;
    f.coeffs.assign(n, K(0));
    // l'(x) = l(Mx):  c'_j = sum_i c_i M_{i,j}
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) f.coeffs[j] += h.coeffs[i] * m[i][j];
    out.hyperplanes.push_back(std::move(f));
  }
  canonicalize_and_validate(out);
  return out;
}

}  // namespace milnor
