#pragma once

#include <vector>

#include "milnor/lattice.hpp"
#include "milnor/poly.hpp"

namespace milnor {

// Witness multiset for hyperplane H in homology degree i: the multiplicities
// of the flats contained in H of codim <= i+1 (dense flats only unless
// dense_only is false), sorted ascending.  H itself always contributes 1.
std::vector<std::vector<long>> witness_multisets(const IntersectionLattice& lat, int i,
                                                 bool dense_only = true);

// Orders e (divisors of d) that the monodromy eigenvalues on H_i(F_A) can
// have: e qualifies iff every hyperplane carries a witness multiplicity
// divisible by e.  Degree n is unconstrained beyond e | d.
std::vector<long> admissible_orders(const IntersectionLattice& lat, int i,
                                    bool dense_only = true);

// Per degree 1..n-1: true when some hyperplane's witness multiset is
// entirely coprime to d, which forces admissible_orders == {1} there
// (eigenvalues != 1 can then appear only in top degree).
std::vector<bool> relprime_shortcut(const IntersectionLattice& lat, bool dense_only = true);

// Orders of eigenvalues on a degree-e cover compatible with the monodromy:
// divisors of gcd(e, d).
std::vector<long> cover_orders(long d, long e);

// Necessary condition for rank-e local-system cohomology to contribute in
// degree i: e >= 2 must divide the multiplicity of some flat of codim <= i+1.
bool local_system_nonvanishing(const IntersectionLattice& lat, long e, int i);

// Eigenvalue multiplicities of the monodromy on H_1 of the Milnor fiber of
// m ordinary concurrent lines: mult over exp(2*pi*i*c/m) is m-1 at c = 0 and
// m-2 elsewhere ((m-1)^2 eigenvalues exp(2*pi*i*(a+b)/m), 1 <= a,b <= m-1).
EigenvalueSpectrum local_charpoly_ordinary(long m);

// lcm of the orders of the eigenvalues above: 1 for m = 2, m for m >= 3.
long local_eigenvalue_order_lcm(long m);

// admissible_orders over all strata, with each codim-2 witness multiplicity
// replaced by the local eigenvalue-order lcm; always contained in
// admissible_orders(lat, i, dense_only=false).
std::vector<long> refined_orders(const IntersectionLattice& lat, int i);

}  // namespace milnor
