#pragma once

#include <map>
#include <string>
#include <vector>

#include "milnor/numeric.hpp"

namespace milnor {

// Dense univariate polynomial over Z; coefficient of t^i at index i,
// trailing (highest-degree) coefficient nonzero unless the polynomial is 0.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial constant(long c);
  static IntPolynomial one_minus_t_pow(long e);  // 1 - t^e
  static IntPolynomial monomial(long e, Int c = Int(1));

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
  Int coeff(long i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  // Exact division; throws InconsistentSpectrum if the remainder is nonzero
  // or the division is not integral.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  IntPolynomial pow(long e) const;  // e >= 0
  Int eval(const Int& x) const;

  // t^deg * p(1/t) — reverses the coefficient sequence.
  IntPolynomial reversed() const;

  // Descending-power display, e.g. "t^2+t+1", "t-1", "2*t^3-t".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> c_;
};

// Cyclotomic polynomial Phi_e(t), monic with integer coefficients.
IntPolynomial cyclotomic(long e);

// Product of factors (1 - t^e)^exponent with possibly negative exponents;
// the factored form used for zeta functions and charpoly reconstruction.
struct CycloExpression {
  std::map<long, long> factors;  // e -> exponent, zero exponents removed

  void multiply(long e, long exponent);
  long exponent_of(long e) const;
  long total_degree() const;  // sum e * exponent (degree as rational function)
  bool is_polynomial() const;
  IntPolynomial expand() const;  // requires all exponents >= 0
  std::string to_string() const;  // "(1-t)^1 (1-t^5)^3"
  bool operator==(const CycloExpression& o) const { return factors == o.factors; }
};

// Multiplicity vector over the e-th roots of unity: mult[j] is the
// multiplicity of exp(2*pi*i*j/order) as an eigenvalue.
struct EigenvalueSpectrum {
  long order = 0;
  std::vector<long> mult;  // size == order

  long total() const;
  bool operator==(const EigenvalueSpectrum& o) const { return order == o.order && mult == o.mult; }
};

// Collapse a spectrum into cyclotomic multiplicities [(e, power)], e ascending.
// Requires mult[] constant on each class {j : order/gcd(j,order) = e}; a
// violation means the spectrum is not the spectrum of an integer matrix and
// raises InternalInconsistency.
std::vector<std::pair<long, long>> cyclotomic_multiplicities(const EigenvalueSpectrum& s);

// prod_j (1 - w^j t)^mult[j], expanded over Z — the det(1 - tT) normalization.
IntPolynomial det_form(const EigenvalueSpectrum& s);

// prod_j (t - w^j)^mult[j] = prod Phi_e(t)^power — the monic charpoly.
IntPolynomial monic_form(const EigenvalueSpectrum& s);

// "(t-1)^2 (t^2+t+1)^1"
std::string factored_string(const EigenvalueSpectrum& s);

std::vector<long> divisors(long n);  // ascending

}  // namespace milnor
