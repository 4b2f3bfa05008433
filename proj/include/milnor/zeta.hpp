#pragma once

#include "milnor/lattice.hpp"
#include "milnor/poly.hpp"

namespace milnor {

// Zeta function of the monodromy, prod_i det(1 - t T_i)^{(-1)^i}, in factored
// form: a single factor (1 - t^d)^chi with chi = euler_char(P^n - A).
// Cross-checked against the stratum-recursion Euler characteristic.
CycloExpression zeta_function(const IntersectionLattice& lat);

// Multiplicity of the eigenvalue 1 of the monodromy on H_i(F_A), which
// equals the i-th Betti number of the projective complement.
long long eigenvalue_one_multiplicity(const IntersectionLattice& lat, int i);

// For line arrangements: recover det(1 - t T_2) from det(1 - t T_1) via
// (1 - t^d)^chi * p1 / (1 - t).  The division must be exact; a remainder
// means the supplied H_1 spectrum is inconsistent with the zeta function.
IntPolynomial reconstruct_top_charpoly(const IntersectionLattice& lat, const IntPolynomial& p1);

}  // namespace milnor
