#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "milnor/arrangement.hpp"
#include "milnor/linalg.hpp"
#include "milnor/poly.hpp"
#include "milnor/threads.hpp"

namespace milnor {

// A flat of the intersection lattice, identified with its closed set of
// hyperplane indices.  Projective flats have codim <= n; for an essential
// arrangement the lattice additionally carries the cone point (codim n+1,
// empty projective locus) so that Whitney-sum computations see the full
// central lattice.
struct Flat {
  std::vector<int> hyperplanes;  // sorted ascending
  int codim = 0;
  int multiplicity = 0;          // = hyperplanes.size()
  long long mobius = 0;
  bool dense = false;            // filled in by compute_density
};

struct IntersectionLattice {
  int ambient_dim = 0;  // n
  int d = 0;
  bool essential = false;  // true iff the cone-point flat (codim n+1) is present
  std::vector<Flat> flats;  // sorted by (codim, hyperplane set); codim >= 1

  std::vector<int> flats_of_codim(int c) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(flats.size()); ++i)
      if (flats[i].codim == c) out.push_back(i);
    return out;
  }
  const Flat* cone_point() const {
    for (const auto& f : flats)
      if (f.codim == ambient_dim + 1) return &f;
    return nullptr;
  }
  int find_flat(const std::vector<int>& hyperplanes) const {
    for (int i = 0; i < static_cast<int>(flats.size()); ++i)
      if (flats[i].hyperplanes == hyperplanes) return i;
    return -1;
  }
};

namespace detail {

template <class K>
std::vector<std::vector<K>> normal_vectors(const BasicArrangement<K>& a,
                                           const std::vector<int>& idx) {
  std::vector<std::vector<K>> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(a.hyperplanes[i].coeffs);
  return out;
}

// Closure of an independent set: all hyperplanes whose form lies in the span.
template <class K>
std::vector<int> span_closure(const BasicArrangement<K>& a, const SpanBasis<K>& span) {
  std::vector<int> closed;
  for (int j = 0; j < a.d(); ++j)
    if (span.contains(a.hyperplanes[j].coeffs)) closed.push_back(j);
  return closed;
}

void mobius_fill(IntersectionLattice& lat);

}  // namespace detail

// Build the intersection lattice by iterated closure: extend each closed
// flat by one hyperplane, close under span membership, repeat.  Every
// closed flat of codim c is the closure of c independent hyperplanes, so
// this enumeration is exhaustive.
template <class K>
IntersectionLattice build_lattice(const BasicArrangement<K>& a) {
  IntersectionLattice lat;
  lat.ambient_dim = a.dim;
  lat.d = a.d();

  std::map<std::vector<int>, int> codim_of;  // closed set -> codim
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < a.d(); ++i) {
    std::vector<int> f{i};  // no two forms proportional, so singletons are closed
    codim_of.emplace(f, 1);
    frontier.push_back(std::move(f));
  }

  int max_codim = a.dim + 1;  // codim n+1 = the cone point, kept if reached
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& set : frontier) {
      int c = codim_of.at(set);
      if (c + 1 > max_codim) continue;
      for (int h = 0; h < a.d(); ++h) {
        if (std::binary_search(set.begin(), set.end(), h)) continue;
        SpanBasis<K> span(a.dim + 1);
        for (int i : set) span.insert(a.hyperplanes[i].coeffs);
        if (!span.insert(a.hyperplanes[h].coeffs)) continue;  // h already contains the flat
        std::vector<int> closed;
        if (span.rank() == a.dim + 1) {
          closed.resize(a.d());
          for (int j = 0; j < a.d(); ++j) closed[j] = j;  // cone point: every form passes
        } else {
          closed = detail::span_closure(a, span);
        }
        if (codim_of.emplace(closed, c + 1).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }

  for (auto& [set, c] : codim_of) {
    Flat f;
    f.hyperplanes = set;
    f.codim = c;
    f.multiplicity = static_cast<int>(set.size());
    lat.flats.push_back(std::move(f));
  }
  std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& x, const Flat& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return x.hyperplanes < y.hyperplanes;
  });
  lat.essential = lat.cone_point() != nullptr;
  detail::mobius_fill(lat);
  return lat;
}

// Mark each flat dense or not.  A flat is dense iff its local central
// arrangement A_F = {H : F subset of H} is indecomposable, i.e. iff the
// linear matroid on the normals of A_F is connected.  Connectivity is read
// off the fundamental-circuit graph of a greedy basis: every non-basis
// normal ties together the basis elements appearing in its (unique)
// representation; one surviving class means indecomposable.
template <class K>
bool locally_indecomposable(const BasicArrangement<K>& a, const std::vector<int>& set) {
  int m = static_cast<int>(set.size());
  if (m == 1) return true;

  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  SpanBasis<K> span(a.dim + 1);
  std::vector<int> basis;  // positions within `set`
  std::vector<std::vector<K>> basis_vecs;
  for (int i = 0; i < m; ++i) {
    const auto& v = a.hyperplanes[set[i]].coeffs;
    if (span.insert(v)) {
      basis.push_back(i);
      basis_vecs.push_back(v);
    } else {
      auto coords = coordinates_in(basis_vecs, v);
      if (!coords) fail(Errc::internal_inconsistency, "dependent normal outside basis span");
      int first = -1;
      for (std::size_t j = 0; j < coords->size(); ++j) {
        if (is_zero((*coords)[j])) continue;
        if (first < 0)
          first = static_cast<int>(j);
        else
          unite(basis[j], basis[first]);
      }
      if (first >= 0) unite(i, basis[first]);
    }
  }
  int root = find(0);
  for (int i = 1; i < m; ++i)
    if (find(i) != root) return false;
  return true;
}

template <class K>
void compute_density(const BasicArrangement<K>& a, IntersectionLattice& lat,
                     Exec exec = Exec::parallel) {
  int n = static_cast<int>(lat.flats.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < n; ++i) lat.flats[i].dense = locally_indecomposable(a, lat.flats[i].hyperplanes);
  (void)exec;
}

template <class K>
IntersectionLattice analyze(const BasicArrangement<K>& a, Exec exec = Exec::parallel) {
  IntersectionLattice lat = build_lattice(a);
  compute_density(a, lat, exec);
  return lat;
}

// --- invariants of the complement -------------------------------------------

// Whitney sum over the full central lattice: sum |mu(X)| t^codim X,
// including the bottom element (codim 0) and the cone point when present.
IntPolynomial central_poincare(const IntersectionLattice& lat);

// Poincare polynomial of P^n - A: central_poincare / (1+t), exact.
IntPolynomial poincare(const IntersectionLattice& lat);

long long betti(const IntersectionLattice& lat, int i);
long long euler_char(const IntersectionLattice& lat);  // poincare(-1)

// Independent route to the same Euler characteristic: inclusion-exclusion
// over locally closed strata, top-down in codimension.
long long euler_char_by_strata(const IntersectionLattice& lat);

// --- generic plane sections -------------------------------------------------

struct SectionResult {
  Arrangement arrangement;                    // induced arrangement in P^k
  std::vector<std::pair<int, int>> flat_map;  // (section flat id, original flat id), codim <= k
  std::uint64_t seed = 0;
  int attempts = 0;
  int coefficient_bound = 0;
};

// Intersect with a random rational k-plane, verifying that the codim <= k
// part of the lattice is carried over bijectively (same hyperplane sets,
// same codims).  Retries with a growing coefficient box; SectionFailure
// after 32 attempts.
SectionResult generic_section(const Arrangement& a, int k, std::uint64_t seed);

}  // namespace milnor
