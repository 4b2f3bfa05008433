#include "milnor/poly.hpp"

#include <algorithm>
#include <numeric>

#include "milnor/errors.hpp"

namespace milnor {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(long c) {
  IntPolynomial p;
  if (c != 0) p.c_ = {Int(c)};
  return p;
}

IntPolynomial IntPolynomial::monomial(long e, Int c) {
  IntPolynomial p;
  if (c != 0) {
    p.c_.assign(e + 1, Int(0));
    p.c_[e] = std::move(c);
  }
  return p;
}

IntPolynomial IntPolynomial::one_minus_t_pow(long e) {
  if (e == 0) return IntPolynomial();  // 1 - t^0 = 0
  IntPolynomial p;
  p.c_.assign(e + 1, Int(0));
  p.c_[0] = 1;
  p.c_[e] = -1;
  return p;
}

Int IntPolynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return Int(0);
  return c_[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) fail(Errc::inconsistent_spectrum, "division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree())
    fail(Errc::inconsistent_spectrum, "polynomial division is not exact (degree too small)");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(degree() - divisor.degree() + 1, Int(0));
  const Int& lead = divisor.c_.back();
  for (long i = degree(); i >= divisor.degree(); --i) {
    Int& top = rem[i];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      fail(Errc::inconsistent_spectrum, "polynomial division is not exact (leading coefficient)");
    Int q = top / lead;
    long shift = i - divisor.degree();
    for (long j = 0; j <= divisor.degree(); ++j) rem[shift + j] -= q * divisor.c_[j];
    quot[shift] = q;
  }
  for (const Int& r : rem)
    if (r != 0) fail(Errc::inconsistent_spectrum, "polynomial division leaves a remainder");
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::pow(long e) const {
  IntPolynomial r = constant(1);
  for (long i = 0; i < e; ++i) r = r * *this;
  return r;
}

Int IntPolynomial::eval(const Int& x) const {
  Int r(0);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Int> r(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (long i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    bool first = s.empty();
    Int a = c > 0 ? c : Int(-c);
    if (c < 0)
      s += "-";
    else if (!first)
      s += "+";
    if (i == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long e = 1; e <= n; ++e)
    if (n % e == 0) out.push_back(e);
  return out;
}

IntPolynomial cyclotomic(long e) {
  // Phi_e = (t^e - 1) / prod_{f | e, f < e} Phi_f
  IntPolynomial num = IntPolynomial::monomial(e) - IntPolynomial::constant(1);
  for (long f : divisors(e)) {
    if (f == e) continue;
    num = num.divide_exact(cyclotomic(f));
  }
  return num;
}

void CycloExpression::multiply(long e, long exponent) {
  if (exponent == 0) return;
  long& v = factors[e];
  v += exponent;
  if (v == 0) factors.erase(e);
}

long CycloExpression::exponent_of(long e) const {
  auto it = factors.find(e);
  return it == factors.end() ? 0 : it->second;
}

long CycloExpression::total_degree() const {
  long deg = 0;
  for (auto& [e, k] : factors) deg += e * k;
  return deg;
}

bool CycloExpression::is_polynomial() const {
  for (auto& [e, k] : factors)
    if (k < 0) return false;
  return true;
}

IntPolynomial CycloExpression::expand() const {
  if (!is_polynomial())
    fail(Errc::inconsistent_spectrum, "cannot expand a factored expression with negative exponents");
  IntPolynomial r = IntPolynomial::constant(1);
  for (auto& [e, k] : factors) r = r * IntPolynomial::one_minus_t_pow(e).pow(k);
  return r;
}

std::string CycloExpression::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (auto& [e, k] : factors) {
    if (!s.empty()) s += " ";
    s += (e == 1) ? "(1-t)" : "(1-t^" + std::to_string(e) + ")";
    s += "^" + std::to_string(k);
  }
  return s;
}

long EigenvalueSpectrum::total() const {
  long t = 0;
  for (long m : mult) t += m;
  return t;
}

std::vector<std::pair<long, long>> cyclotomic_multiplicities(const EigenvalueSpectrum& s) {
  std::map<long, long> by_order;
  for (long j = 0; j < s.order; ++j) {
    long e = s.order / std::gcd(j, s.order);  // gcd(0, n) = n, so j = 0 gives e = 1
    auto [it, inserted] = by_order.try_emplace(e, s.mult[j]);
    if (!inserted && it->second != s.mult[j])
      fail(Errc::internal_inconsistency,
           "eigenvalue multiplicities are not constant on Galois classes (order " +
               std::to_string(e) + ")");
  }
  std::vector<std::pair<long, long>> out;
  for (auto& [e, m] : by_order)
    if (m != 0) out.emplace_back(e, m);
  return out;
}

IntPolynomial det_form(const EigenvalueSpectrum& s) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (auto& [e, m] : cyclotomic_multiplicities(s)) r = r * cyclotomic(e).reversed().pow(m);
  return r;
}

IntPolynomial monic_form(const EigenvalueSpectrum& s) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (auto& [e, m] : cyclotomic_multiplicities(s)) r = r * cyclotomic(e).pow(m);
  return r;
}

std::string factored_string(const EigenvalueSpectrum& s) {
  auto classes = cyclotomic_multiplicities(s);
  if (classes.empty()) return "1";
  std::string out;
  for (auto& [e, m] : classes) {
    if (!out.empty()) out += " ";
    out += "(" + cyclotomic(e).to_string() + ")^" + std::to_string(m);
  }
  return out;
}

}  // namespace milnor
