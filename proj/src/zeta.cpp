#include "milnor/zeta.hpp"

namespace milnor {

CycloExpression zeta_function(const IntersectionLattice& lat) {
  if (lat.d < 1) fail(Errc::invalid_dimension, "empty arrangement");
  long long chi = euler_char(lat);
  if (chi != euler_char_by_strata(lat))
    fail(Errc::internal_inconsistency,
         "Euler characteristic mismatch between Mobius and stratum recursion");
  CycloExpression z;
  z.multiply(lat.d, chi);
  return z;
}

long long eigenvalue_one_multiplicity(const IntersectionLattice& lat, int i) {
  return betti(lat, i);
}

IntPolynomial reconstruct_top_charpoly(const IntersectionLattice& lat, const IntPolynomial& p1) {
  if (lat.ambient_dim != 2)
    fail(Errc::invalid_dimension, "top charpoly reconstruction is defined for line arrangements");
  if (lat.d < 1) fail(Errc::invalid_dimension, "empty arrangement");
  long long chi = euler_char(lat);
  IntPolynomial num = p1;
  IntPolynomial dt = IntPolynomial::one_minus_t_pow(lat.d);
  if (chi >= 0) {
    for (long long i = 0; i < chi; ++i) num = num * dt;
  }
  IntPolynomial result = num.divide_exact(IntPolynomial::one_minus_t_pow(1));
  if (chi < 0) {
    for (long long i = 0; i < -chi; ++i) result = result.divide_exact(dt);
  }
  return result;
}

}  // namespace milnor
