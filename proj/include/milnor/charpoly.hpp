#pragma once

#include <array>
#include <string>
#include <vector>

#include "milnor/lattice.hpp"
#include "milnor/linalg.hpp"
#include "milnor/poly.hpp"

namespace milnor {

// A singular point of a line arrangement: the locus of a codim-2 flat.
template <class K>
struct Vertex {
  std::array<K, 3> point;  // canonical projective coordinates
  int multiplicity = 0;
  int flat_index = 0;  // index into the lattice's flats
};

// Compute and verify the vertices of a line arrangement: the point of each
// codim-2 flat, obtained as the cross product of the first two of its forms,
// and checked to lie on exactly the flat's lines.
template <class K>
std::vector<Vertex<K>> vertices(const BasicArrangement<K>& a, const IntersectionLattice& lat) {
  if (a.dim != 2) fail(Errc::invalid_dimension, "vertices are defined for line arrangements");
  std::vector<Vertex<K>> out;
  for (int fi = 0; fi < static_cast<int>(lat.flats.size()); ++fi) {
    const Flat& f = lat.flats[fi];
    if (f.codim != 2) continue;
    const auto& u = a.hyperplanes[f.hyperplanes[0]].coeffs;
    const auto& v = a.hyperplanes[f.hyperplanes[1]].coeffs;
    std::vector<K> p{K(u[1] * v[2] - u[2] * v[1]), K(u[2] * v[0] - u[0] * v[2]),
                     K(u[0] * v[1] - u[1] * v[0])};
    canonicalize_coeffs(p);
    for (int j = 0; j < a.d(); ++j) {
      const auto& c = a.hyperplanes[j].coeffs;
      K val = K(c[0] * p[0] + c[1] * p[1] + c[2] * p[2]);
      bool on_line = is_zero(val);
      bool in_flat = std::binary_search(f.hyperplanes.begin(), f.hyperplanes.end(), j);
      if (on_line != in_flat)
        fail(Errc::internal_inconsistency,
             "vertex incidence disagrees with the lattice at flat " + std::to_string(fi));
    }
    Vertex<K> vx;
    vx.point = {p[0], p[1], p[2]};
    vx.multiplicity = f.multiplicity;
    vx.flat_index = fi;
    out.push_back(std::move(vx));
  }
  return out;
}

// How the vanishing order at a point of multiplicity `mult` is derived from
// the eigenvalue index k/m.  The default rule matches the quasiadjunction
// formula away from integer k*mult/m and the worked pencil values at them;
// the two literal alternatives are kept selectable for comparison.
enum class ExponentConvention { reconciled, strict, paper_theorem };

ExponentConvention exponent_convention_from_string(const std::string& name);
const char* exponent_convention_name(ExponentConvention c);

// Vanishing order s demanded at a point of multiplicity `mult` for the
// curve system attached to the eigenvalue exp(2*pi*i*k/m); m | d, 1<=k<m.
// The reconciled and strict rules depend only on the fraction k/m; the
// paper-theorem rule needs the total line count d (pass d, or omit it when
// m is already the full grid).
long local_exponent(long mult, long k, long m,
                    ExponentConvention conv = ExponentConvention::reconciled, long d = -1);

struct SuperabundanceCertificate {
  long k = 0, m = 0;
  long degree = 0;                // e = d - 3 - k*d/m, may be negative
  std::vector<long> exponents;    // vanishing order per vertex, vertex order
  long rows = 0, cols = 0, rank = 0;  // interpolation matrix (all 0 when e < 0)
  long h0 = 0;
  long chi_ideal = 0;             // (e+1)(e+2)/2 - sum s(s+1)/2
  long h2 = 0;                    // h^2(O(e)) = (-e-1)(-e-2)/2 for e <= -3
  long sigma = 0;                 // h0 - chi_ideal + h2 >= 0
};

// Interpolation matrix for plane curves of degree e with vanishing order
// s[i] at vertex i: one row per derivative condition of order < s[i], taken
// in the affine chart at the point's largest-magnitude coordinate; one
// column per degree-e monomial.
template <class K>
Matrix<K> interpolation_matrix(const std::vector<Vertex<K>>& vs, const std::vector<long>& s,
                               long e) {
  if (e < 0) fail(Errc::invalid_dimension, "interpolation needs e >= 0");
  // columns: monomials x^a y^b z^c, a+b+c = e, lex by (a, b) descending
  std::vector<std::array<long, 3>> monomials;
  for (long a = e; a >= 0; --a)
    for (long b = e - a; b >= 0; --b) monomials.push_back({a, b, e - a - b});
  long rows = 0;
  for (long si : s) rows += si * (si + 1) / 2;
  Matrix<K> m(static_cast<int>(rows), static_cast<int>(monomials.size()));

  long row = 0;
  for (std::size_t vi = 0; vi < vs.size(); ++vi) {
    long sv = s[vi];
    if (sv <= 0) continue;
    const auto& p = vs[vi].point;
    int chart = 0;
    for (int c = 1; c < 3; ++c)
      if (!is_zero(p[c]) && (is_zero(p[chart]) || magnitude(p[c]) > magnitude(p[chart]))) chart = c;
    if (is_zero(p[chart])) fail(Errc::internal_inconsistency, "vertex with all-zero coordinates");
    int u = chart == 0 ? 1 : 0;            // the two affine coordinates, in index order
    int v = chart == 2 ? 1 : 2;
    K inv = K(1) / p[chart];
    K pu = K(p[u] * inv), pv = K(p[v] * inv);

    // Precompute powers up to degree e.
    std::vector<K> pu_pow(e + 1, K(1)), pv_pow(e + 1, K(1));
    for (long i = 1; i <= e; ++i) {
      pu_pow[i] = K(pu_pow[i - 1] * pu);
      pv_pow[i] = K(pv_pow[i - 1] * pv);
    }

    for (long order = 0; order < sv; ++order) {
      for (long i = order; i >= 0; --i) {
        long j = order - i;  // d^i/du^i d^j/dv^j
        for (std::size_t col = 0; col < monomials.size(); ++col) {
          long au = monomials[col][u], av = monomials[col][v];
          if (i > au || j > av) continue;  // derivative kills the monomial
          long falling = 1;
          for (long t = 0; t < i; ++t) falling *= au - t;
          for (long t = 0; t < j; ++t) falling *= av - t;
          m.at(static_cast<int>(row), static_cast<int>(col)) =
              K(K(falling) * pu_pow[au - i] * pv_pow[av - j]);
        }
        ++row;
      }
    }
  }
  return m;
}

template <class K>
long interpolation_h0(const std::vector<Vertex<K>>& vs, const std::vector<long>& s, long e,
                      Exec exec = Exec::parallel, SuperabundanceCertificate* cert = nullptr) {
  if (e < 0) {
    if (cert) cert->rows = cert->cols = cert->rank = 0;
    return 0;
  }
  Matrix<K> m = interpolation_matrix(vs, s, e);
  long rank = rank_of(m, exec);
  if (cert) {
    cert->rows = m.rows();
    cert->cols = m.cols();
    cert->rank = rank;
  }
  return m.cols() - rank;
}

// The full superabundance certificate for eigenvalue index (k, m):
// sigma = h0 - chi_ideal + h2 for the ideal sheaf of the fat-point scheme.
template <class K>
SuperabundanceCertificate sigma_certificate(
    const BasicArrangement<K>& a, const std::vector<Vertex<K>>& vs, long k, long m,
    ExponentConvention conv = ExponentConvention::reconciled, Exec exec = Exec::parallel) {
  long d = a.d();
  if (d < 1) fail(Errc::invalid_dimension, "empty arrangement");
  if (m < 2 || d % m != 0)
    fail(Errc::invalid_dimension, "m = " + std::to_string(m) + " must divide d = " + std::to_string(d));
  if (k < 1 || k >= m) fail(Errc::invalid_dimension, "k must satisfy 1 <= k <= m-1");

  SuperabundanceCertificate cert;
  cert.k = k;
  cert.m = m;
  cert.degree = d - 3 - k * (d / m);

  long cond = 0;
  for (const auto& v : vs) {
    long s = local_exponent(v.multiplicity, k, m, conv, d);
    cert.exponents.push_back(s);
    cond += s * (s + 1) / 2;
  }
  cert.h0 = interpolation_h0(vs, cert.exponents, cert.degree, exec, &cert);
  long e = cert.degree;
  cert.chi_ideal = (e + 1) * (e + 2) / 2 - cond;
  cert.h2 = e <= -3 ? (-e - 2) * (-e - 1) / 2 : 0;
  cert.sigma = cert.h0 - cert.chi_ideal + cert.h2;
  if (cert.sigma < 0)
    fail(Errc::negative_sigma,
         "sigma(" + std::to_string(k) + "," + std::to_string(m) + ") = " +
             std::to_string(cert.sigma) + " (h0=" + std::to_string(cert.h0) +
             ", chi=" + std::to_string(cert.chi_ideal) + ", h2=" + std::to_string(cert.h2) + ")");
  return cert;
}

struct SpectrumResult {
  EigenvalueSpectrum spectrum;  // over the d-th roots of unity
  std::vector<SuperabundanceCertificate> certificates;  // k = 1..d-1, m = d
};

// Monodromy eigenvalue multiplicities on H_1 of the Milnor fiber of a line
// arrangement: mult[0] = d-1 and mult[j] = sigma_j(d) + sigma_{d-j}(d).
// The per-j certificates are independent, so they are computed in parallel;
// assembly order is fixed, making the result identical in both modes.
template <class K>
SpectrumResult monodromy_spectrum(const BasicArrangement<K>& a, const IntersectionLattice& lat,
                                  ExponentConvention conv = ExponentConvention::reconciled,
                                  Exec exec = Exec::parallel) {
  if (a.dim != 2) fail(Errc::invalid_dimension, "monodromy spectrum is defined for line arrangements");
  long d = a.d();
  if (d < 1) fail(Errc::invalid_dimension, "empty arrangement");
  std::vector<Vertex<K>> vs = vertices(a, lat);

  SpectrumResult out;
  out.certificates.resize(d > 1 ? d - 1 : 0);
  std::exception_ptr pending;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
  for (long k = 1; k <= d - 1; ++k) {
    try {
      out.certificates[k - 1] = sigma_certificate(a, vs, k, d, conv, Exec::serial);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!pending) pending = std::current_exception();
    }
  }
  (void)exec;
  if (pending) std::rethrow_exception(pending);

  out.spectrum.order = d;
  out.spectrum.mult.assign(d, 0);
  out.spectrum.mult[0] = d - 1;
  for (long j = 1; j <= d - 1; ++j)
    out.spectrum.mult[j] = out.certificates[j - 1].sigma + out.certificates[d - j - 1].sigma;
  return out;
}

// Divisor-level query sigma_k(m) = sigma_{k d/m}(d); the reduced-fraction
// consistency between this and the direct (k, m) computation is a test
// invariant.
template <class K>
SuperabundanceCertificate sigma_reduced(const BasicArrangement<K>& a,
                                        const std::vector<Vertex<K>>& vs, long k, long m,
                                        ExponentConvention conv = ExponentConvention::reconciled,
                                        Exec exec = Exec::parallel) {
  return sigma_certificate(a, vs, k * (a.d() / m), a.d(), conv, exec);
}

// H_1 of the Milnor fiber as a module over the monodromy, for arrangements
// whose vertices all have multiplicity 2 or 3:
// (C[t,t^-1]/(t^3-1))^s + (C[t,t^-1]/(t-1))^(d-1-s), s = mult at exp(2pi*i/3).
struct TriplePointModule {
  long s = 0;
  std::string decomposition;
};

TriplePointModule triple_point_module(const IntersectionLattice& lat,
                                      const EigenvalueSpectrum& spectrum);

}  // namespace milnor
