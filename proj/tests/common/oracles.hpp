#pragma once

// Test-only oracles.  Everything here is intentionally naive — exhaustive
// enumeration, Laplace expansion — so the production kernels are checked
// against code with no shared logic.

#include <array>
#include <random>
#include <vector>

#include "milnor/arrangement.hpp"
#include "milnor/linalg.hpp"

namespace testoracle {

using milnor::Arrangement;
using milnor::Rat;

// Determinant by Laplace expansion along the first row (exponential; n <= 6).
inline Rat det_laplace(const std::vector<std::vector<Rat>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rat det(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Rat term(m[0][j] * det_laplace(minor));
    det += (j % 2 == 0) ? term : Rat(-term);
  }
  return det;
}

inline bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Rank as the size of the largest square submatrix with nonzero determinant.
inline int rank_by_minors(const std::vector<std::vector<Rat>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  for (int r = std::min(nr, nc); r >= 1; --r) {
    std::vector<int> ri(r);
    for (int i = 0; i < r; ++i) ri[i] = i;
    do {
      std::vector<int> ci(r);
      for (int i = 0; i < r; ++i) ci[i] = i;
      do {
        std::vector<std::vector<Rat>> sub(r, std::vector<Rat>(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) sub[i][j] = rows[ri[i]][ci[j]];
        if (det_laplace(sub) != 0) return r;
      } while (next_combination(ci, nc));
    } while (next_combination(ri, nr));
  }
  return 0;
}

// A set of normals is decomposable iff some bipartition is rank-additive.
// Exhaustive over all 2^(k-1)-1 bipartitions; k <= 6 keeps this instant.
inline bool dense_by_bipartition(const std::vector<std::vector<Rat>>& normals) {
  int k = static_cast<int>(normals.size());
  if (k <= 1) return true;
  int total = rank_by_minors(normals);
  for (unsigned mask = 1; mask < (1u << k) - 1; ++mask) {
    if (!(mask & 1u)) continue;  // index 0 on the left kills mirror duplicates
    std::vector<std::vector<Rat>> left, right;
    for (int i = 0; i < k; ++i) (mask >> i & 1u ? left : right).push_back(normals[i]);
    if (rank_by_minors(left) + rank_by_minors(right) == total) return false;
  }
  return true;
}

// H_1 eigenvalue counts for m ordinary concurrent lines by direct
// enumeration: (m-1)^2 eigenvalues exp(2*pi*i*(a+b)/m), 1 <= a,b <= m-1.
inline std::vector<long> local_h1_counts(long m) {
  std::vector<long> counts(m, 0);
  for (long a = 1; a <= m - 1; ++a)
    for (long b = 1; b <= m - 1; ++b) ++counts[(a + b) % m];
  return counts;
}

inline long small_int(std::mt19937_64& rng, long span) {
  return static_cast<long>(rng() % (2 * span + 1)) - span;
}

// Random arrangement of 3..8 distinct lines, biased toward pencils (0-2
// randomly placed centers) so multiple points of multiplicity >= 3 are
// common and the superabundance path is actually exercised.
inline Arrangement random_lines(std::mt19937_64& rng) {
  int d = 3 + static_cast<int>(rng() % 6);
  int npts = static_cast<int>(rng() % 3);
  std::vector<std::array<long, 3>> pts;
  for (int i = 0; i < npts; ++i) {
    std::array<long, 3> p{};
    do {
      for (auto& x : p) x = small_int(rng, 2);
    } while (p[0] == 0 && p[1] == 0 && p[2] == 0);
    pts.push_back(p);
  }
  Arrangement a;
  a.dim = 2;
  int guard = 0;
  while (a.d() < d && ++guard < 500) {
    std::vector<Rat> c(3, Rat(0));
    if (!pts.empty() && rng() % 3 != 0) {
      const auto& p = pts[rng() % pts.size()];
      int piv = 0;
      for (int t = 0; t < 3; ++t)
        if (p[t] != 0) piv = t;
      int i = (piv + 1) % 3, j = (piv + 2) % 3;
      long u = small_int(rng, 3), v = small_int(rng, 3);
      if (u == 0 && v == 0) u = 1;
      c[i] = u;
      c[j] = v;
      c[piv] = Rat(-(u * p[i] + v * p[j]), p[piv]);
    } else {
      for (auto& x : c) x = Rat(small_int(rng, 4));
    }
    milnor::canonicalize_coeffs(c);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    bool dup = false;
    for (const auto& h : a.hyperplanes) dup = dup || h.coeffs == c;
    if (!dup) a.hyperplanes.push_back({c});
  }
  milnor::canonicalize_and_validate(a);
  return a;
}

// Random invertible integer 3x3 matrix (a projective change of coordinates).
inline std::vector<std::vector<Rat>> random_pgl3(std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
    for (auto& row : m)
      for (auto& x : row) x = Rat(small_int(rng, 3));
    if (det_laplace(m) != 0) return m;
  }
}

}  // namespace testoracle
