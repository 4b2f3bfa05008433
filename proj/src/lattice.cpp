#include "milnor/lattice.hpp"

namespace milnor {
namespace detail {

void mobius_fill(IntersectionLattice& lat) {
  // mu(bottom) = 1; flats are sorted by codim, and proper containment of
  // closed hyperplane sets forces strictly smaller codim, so a single sweep
  // suffices: mu(X) = -(1 + sum_{Y < X} mu(Y)).
  for (std::size_t i = 0; i < lat.flats.size(); ++i) {
    long long acc = 1;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& small = lat.flats[j].hyperplanes;
      const auto& big = lat.flats[i].hyperplanes;
      if (small.size() < big.size() &&
          std::includes(big.begin(), big.end(), small.begin(), small.end()))
        acc += lat.flats[j].mobius;
    }
    lat.flats[i].mobius = -acc;
  }
}

}  // namespace detail

IntPolynomial central_poincare(const IntersectionLattice& lat) {
  std::vector<Int> c(lat.ambient_dim + 2, Int(0));
  c[0] = 1;  // the bottom element P^n itself
  for (const auto& f : lat.flats) {
    long m = static_cast<long>(f.mobius < 0 ? -f.mobius : f.mobius);
    c[f.codim] += Int(m);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poincare(const IntersectionLattice& lat) {
  IntPolynomial divisor(std::vector<Int>{Int(1), Int(1)});
  try {
    return central_poincare(lat).divide_exact(divisor);
  } catch (const Error&) {
    fail(Errc::internal_inconsistency,
         "(1+t) does not divide the central Poincare polynomial; the lattice is inconsistent");
  }
}

long long betti(const IntersectionLattice& lat, int i) {
  if (i < 0 || i > lat.ambient_dim)
    fail(Errc::invalid_dimension, "betti degree out of range 0..n");
  return poincare(lat).coeff(i).get_si();
}

long long euler_char(const IntersectionLattice& lat) {
  return poincare(lat).eval(Int(-1)).get_si();
}

long long euler_char_by_strata(const IntersectionLattice& lat) {
  // chi of each open stratum, top-down: chi_open(X) = chi(P^{n-codim}) -
  // sum over strictly finer projective flats of their open chi.
  int nf = static_cast<int>(lat.flats.size());
  std::vector<long long> open_chi(nf, 0);
  for (int i = nf - 1; i >= 0; --i) {
    const Flat& x = lat.flats[i];
    if (x.codim > lat.ambient_dim) continue;  // cone point is not a stratum of P^n
    long long c = lat.ambient_dim - x.codim + 1;  // chi(P^m) = m+1
    for (int j = i + 1; j < nf; ++j) {
      const Flat& y = lat.flats[j];
      if (y.codim > lat.ambient_dim || y.codim <= x.codim) continue;
      if (y.hyperplanes.size() > x.hyperplanes.size() &&
          std::includes(y.hyperplanes.begin(), y.hyperplanes.end(), x.hyperplanes.begin(),
                        x.hyperplanes.end()))
        c -= open_chi[j];
    }
    open_chi[i] = c;
  }
  long long total = lat.ambient_dim + 1;
  for (int i = 0; i < nf; ++i)
    if (lat.flats[i].codim <= lat.ambient_dim) total -= open_chi[i];
  return total;
}

}  // namespace milnor
