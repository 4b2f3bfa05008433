#include <doctest.h>

#include "milnor/poly.hpp"

#include "milnor/errors.hpp"

using namespace milnor;

namespace {
IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Int> c;
  for (long x : ascending) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}
}  // namespace

TEST_CASE("polynomial arithmetic and normalization") {
  IntPolynomial p = poly({1, 2});       // 1 + 2t
  IntPolynomial q = poly({-1, 0, 1});   // t^2 - 1
  CHECK((p + q).to_string() == "t^2+2*t");
  CHECK((p - p).is_zero());
  CHECK((p * q).to_string() == "2*t^3+t^2-2*t-1");
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({5}).degree() == 0);
  CHECK(IntPolynomial().degree() == -1);
  CHECK(p.eval(Int(3)) == 7);
  CHECK(q.reversed().to_string() == "-t^2+1");
  CHECK(IntPolynomial::one_minus_t_pow(0).is_zero());
  CHECK(IntPolynomial::one_minus_t_pow(3).to_string() == "-t^3+1");
  CHECK(poly({1, 1}).pow(2).to_string() == "t^2+2*t+1");
}

TEST_CASE("exact division succeeds exactly when it should") {
  IntPolynomial prod = poly({1, 1}) * poly({-1, 3, 2});
  CHECK(prod.divide_exact(poly({1, 1})).to_string() == "2*t^2+3*t-1");
  CHECK_THROWS_AS(poly({1, 1, 1}).divide_exact(poly({1, 1})), Error);
  CHECK_THROWS_AS(poly({1}).divide_exact(poly({1, 1})), Error);
  CHECK_THROWS_AS(poly({1}).divide_exact(IntPolynomial()), Error);
  try {
    poly({1, 1, 1}).divide_exact(poly({1, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_spectrum);
  }
}

TEST_CASE("cyclotomic polynomials match the classical table") {
  CHECK(cyclotomic(1).to_string() == "t-1");
  CHECK(cyclotomic(2).to_string() == "t+1");
  CHECK(cyclotomic(3).to_string() == "t^2+t+1");
  CHECK(cyclotomic(4).to_string() == "t^2+1");
  CHECK(cyclotomic(6).to_string() == "t^2-t+1");
  CHECK(cyclotomic(12).to_string() == "t^4-t^2+1");
  // product over divisors reassembles t^n - 1
  for (long n : {6L, 8L, 12L}) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (long e : divisors(n)) prod = prod * cyclotomic(e);
    CHECK(prod.to_string() == (IntPolynomial::monomial(n) - IntPolynomial::constant(1)).to_string());
  }
}

TEST_CASE("divisors enumeration") {
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("CycloExpression algebra and display") {
  CycloExpression z;
  z.multiply(3, -1);
  CHECK(z.to_string() == "(1-t^3)^-1");
  CHECK(!z.is_polynomial());
  CHECK_THROWS_AS(z.expand(), Error);
  z.multiply(3, 1);
  CHECK(z.to_string() == "1");
  z.multiply(5, 3);
  z.multiply(1, 2);
  CHECK(z.to_string() == "(1-t)^2 (1-t^5)^3");
  CHECK(z.total_degree() == 17);
  CHECK(z.exponent_of(5) == 3);
  CHECK(z.exponent_of(7) == 0);
  IntPolynomial expanded = z.expand();
  CHECK(expanded.degree() == 17);
  CHECK(expanded.coeff(0) == 1);
}

TEST_CASE("spectra factor into cyclotomic classes") {
  EigenvalueSpectrum s;
  s.order = 3;
  s.mult = {2, 1, 1};
  auto classes = cyclotomic_multiplicities(s);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::pair<long, long>{1, 2});
  CHECK(classes[1] == std::pair<long, long>{3, 1});
  CHECK(factored_string(s) == "(t-1)^2 (t^2+t+1)^1");
  CHECK(det_form(s).to_string() == "t^4-t^3-t+1");          // (1-t)^2 (1+t+t^2)
  CHECK(monic_form(s).to_string() == "t^4-t^3-t+1");        // palindromic here
  CHECK(s.total() == 4);
}

TEST_CASE("non-Galois-constant multiplicities are an internal error") {
  EigenvalueSpectrum s;
  s.order = 3;
  s.mult = {1, 1, 0};  // exp(2pi*i/3) and its conjugate disagree
  CHECK_THROWS_AS(cyclotomic_multiplicities(s), Error);
  try {
    cyclotomic_multiplicities(s);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::internal_inconsistency);
  }
}

TEST_CASE("det and monic forms differ by the reversal sign") {
  EigenvalueSpectrum s;
  s.order = 4;
  s.mult = {3, 1, 2, 1};
  // det form = (1-t)^3 (1+t)^2 (1+t^2), monic = (t-1)^3 (t+1)^2 (t^2+1)
  CHECK(det_form(s).eval(Int(0)) == 1);
  CHECK(monic_form(s).coeff(monic_form(s).degree()) == 1);
  CHECK(factored_string(s) == "(t-1)^3 (t+1)^2 (t^2+1)^1");
  CHECK(det_form(s).degree() == s.total());
}
