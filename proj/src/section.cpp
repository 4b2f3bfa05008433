#include <random>

#include "milnor/lattice.hpp"

namespace milnor {

namespace {

// Signature of the codim <= k part of a lattice: (codim, hyperplane set),
// sorted — the part a transversal k-plane must preserve.
std::vector<std::pair<int, std::vector<int>>> truncated_signature(const IntersectionLattice& lat,
                                                                  int k) {
  std::vector<std::pair<int, std::vector<int>>> sig;
  for (const auto& f : lat.flats)
    if (f.codim <= k) sig.emplace_back(f.codim, f.hyperplanes);
  return sig;  // lattice order is already (codim, set)
}

}  // namespace

SectionResult generic_section(const Arrangement& a, int k, std::uint64_t seed) {
  if (a.d() < 1) fail(Errc::invalid_dimension, "section of an empty arrangement");
  if (k < 2 || k >= a.dim)
    fail(Errc::invalid_dimension,
         "section dimension k must satisfy 2 <= k < n (got k=" + std::to_string(k) +
             ", n=" + std::to_string(a.dim) + ")");

  IntersectionLattice full = build_lattice(a);
  auto want = truncated_signature(full, k);

  const int max_attempts = 32;
  long bound = 16;
  for (int attempt = 0; attempt < max_attempts; ++attempt, bound = std::min(bound * 2, 1L << 24)) {
    std::seed_seq sseq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(attempt)};
    std::mt19937_64 rng(sseq);
    auto draw = [&]() {
      return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    };

    // Random (k+1) x (n+1) parametrization y -> y*M of a k-plane.
    std::vector<std::vector<Rat>> m(k + 1, std::vector<Rat>(a.dim + 1));
    for (auto& row : m)
      for (auto& entry : row) entry = Rat(draw());
    if (rank_of_vectors(m, a.dim + 1) != k + 1) continue;

    Arrangement sec;
    sec.dim = k;
    bool degenerate = false;
    for (const auto& h : a.hyperplanes) {
      LinearForm<Rat> f;
      f.coeffs.assign(k + 1, Rat(0));
      for (int r = 0; r <= k; ++r)
        for (int c = 0; c <= a.dim; ++c) f.coeffs[r] += m[r][c] * h.coeffs[c];
      bool nonzero = false;
      for (const Rat& x : f.coeffs) nonzero = nonzero || !is_zero(x);
      if (!nonzero) {
        degenerate = true;
        break;
      }
      canonicalize_coeffs(f.coeffs);
      sec.hyperplanes.push_back(std::move(f));
    }
    if (degenerate) continue;
    bool proportional = false;
    for (int i = 0; i < sec.d() && !proportional; ++i)
      for (int j = i + 1; j < sec.d(); ++j)
        if (sec.hyperplanes[i] == sec.hyperplanes[j]) {
          proportional = true;
          break;
        }
    if (proportional) continue;

    IntersectionLattice cut = build_lattice(sec);
    if (truncated_signature(cut, k) != want) continue;

    SectionResult out;
    out.arrangement = std::move(sec);
    out.seed = seed;
    out.attempts = attempt + 1;
    out.coefficient_bound = static_cast<int>(bound);
    for (int i = 0; i < static_cast<int>(cut.flats.size()); ++i) {
      if (cut.flats[i].codim > k) continue;
      int orig = full.find_flat(cut.flats[i].hyperplanes);
      if (orig < 0) fail(Errc::internal_inconsistency, "section flat lost its counterpart");
      out.flat_map.emplace_back(i, orig);
    }
    return out;
  }
  fail(Errc::section_failure,
       "no transversal rational " + std::to_string(k) + "-plane found after " +
           std::to_string(max_attempts) + " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace milnor
