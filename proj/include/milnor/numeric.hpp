#pragma once

#include <gmpxx.h>

#include <string>

#include "milnor/errors.hpp"

namespace milnor {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical by gmpxx: reduced, positive denominator

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

// Comparison key used when picking the affine chart at a point: the
// coordinate of largest magnitude wins.
inline Rat magnitude(const Rat& x) { return Rat(abs(x)); }

// Parse a single rational token, "p" or "p/q" in base 10.
Rat parse_rational(const std::string& token);

// Element of the cyclotomic field Q(w), w a primitive cube root of unity,
// represented as a + b*w with w^2 = -1 - w.  Only the builtin dual-Hesse
// arrangement needs this scalar; every templated algorithm treats it like
// any other exact field.
struct Cyc3 {
  Rat a, b;

  Cyc3() : a(0), b(0) {}
  Cyc3(int v) : a(v), b(0) {}        // NOLINT: implicit from integers is intended
  Cyc3(long v) : a(v), b(0) {}       // NOLINT
  Cyc3(const Rat& ra) : a(ra), b(0) {}
  Cyc3(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Cyc3 w() { return Cyc3(Rat(0), Rat(1)); }

  friend Cyc3 operator+(const Cyc3& x, const Cyc3& y) { return Cyc3(Rat(x.a + y.a), Rat(x.b + y.b)); }
  friend Cyc3 operator-(const Cyc3& x, const Cyc3& y) { return Cyc3(Rat(x.a - y.a), Rat(x.b - y.b)); }
  friend Cyc3 operator-(const Cyc3& x) { return Cyc3(Rat(-x.a), Rat(-x.b)); }
  friend Cyc3 operator*(const Cyc3& x, const Cyc3& y) {
    // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2,  w^2 = -1-w
    Rat p(x.a * y.a), q(x.a * y.b + x.b * y.a), r(x.b * y.b);
    return Cyc3(Rat(p - r), Rat(q - r));
  }

  Cyc3& operator+=(const Cyc3& y) { *this = *this + y; return *this; }
  Cyc3& operator-=(const Cyc3& y) { *this = *this - y; return *this; }
  Cyc3& operator*=(const Cyc3& y) { *this = *this * y; return *this; }

  // conj(a+bw) = a + b*w^2 = (a-b) - b*w;  N(a+bw) = a^2 - ab + b^2 >= 0
  Cyc3 conj() const { return Cyc3(Rat(a - b), Rat(-b)); }
  Rat norm() const { return Rat(a * a - a * b + b * b); }

  Cyc3 inverse() const {
    Rat n = norm();
    if (sgn(n) == 0) fail(Errc::internal_inconsistency, "division by zero in Q(w)");
    Cyc3 c = conj();
    return Cyc3(Rat(c.a / n), Rat(c.b / n));
  }
  friend Cyc3 operator/(const Cyc3& x, const Cyc3& y) { return x * y.inverse(); }
  Cyc3& operator/=(const Cyc3& y) { *this = *this / y; return *this; }

  friend bool operator==(const Cyc3& x, const Cyc3& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Cyc3& x, const Cyc3& y) { return !(x == y); }
};

inline bool is_zero(const Cyc3& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }
inline Rat magnitude(const Cyc3& x) { return x.norm(); }
std::string to_string(const Cyc3& x);

// Deterministic (arbitrary but total) ordering used only to sort output.
inline bool scalar_less(const Rat& x, const Rat& y) { return x < y; }
inline bool scalar_less(const Cyc3& x, const Cyc3& y) {
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

}  // namespace milnor
