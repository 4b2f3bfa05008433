#include "milnor/charpoly.hpp"

namespace milnor {

ExponentConvention exponent_convention_from_string(const std::string& name) {
  if (name == "reconciled") return ExponentConvention::reconciled;
  if (name == "strict") return ExponentConvention::strict;
  if (name == "paper-theorem") return ExponentConvention::paper_theorem;
  fail(Errc::syntax_error, "unknown exponent convention '" + name +
                               "' (expected reconciled, strict or paper-theorem)");
}

const char* exponent_convention_name(ExponentConvention c) {
  switch (c) {
    case ExponentConvention::reconciled: return "reconciled";
    case ExponentConvention::strict: return "strict";
    case ExponentConvention::paper_theorem: return "paper-theorem";
  }
  return "?";
}

long local_exponent(long mult, long k, long m, ExponentConvention conv, long d) {
  if (mult < 2 || m < 2 || k < 1 || k >= m)
    fail(Errc::invalid_dimension, "local_exponent needs mult >= 2 and 1 <= k < m");
  long s = 0;
  switch (conv) {
    case ExponentConvention::reconciled:
      // ceil(k*mult/m) for positive integers
      s = mult - 1 - (k * mult + m - 1) / m;
      break;
    case ExponentConvention::strict:
      // quasiadjunction ideal read with a strict inequality throughout
      s = mult - 2 - (k * mult) / m;
      break;
    case ExponentConvention::paper_theorem: {
      // the printed exponent mult - k*d/m - 1, independent of how the
      // eigenvalue index is reduced
      if (d > 0 && d % m != 0)
        fail(Errc::invalid_dimension, "paper-theorem exponent needs m | d");
      long scaled = d > 0 ? k * (d / m) : k;
      s = mult - scaled - 1;
      break;
    }
  }
  return s > 0 ? s : 0;
}

TriplePointModule triple_point_module(const IntersectionLattice& lat,
                                      const EigenvalueSpectrum& spectrum) {
  if (lat.ambient_dim != 2)
    fail(Errc::invalid_dimension, "module decomposition is defined for line arrangements");
  for (const auto& f : lat.flats)
    if (f.codim == 2 && f.multiplicity > 3)
      fail(Errc::not_triple_point_arrangement,
           "vertex of multiplicity " + std::to_string(f.multiplicity) +
               " (only double and triple points are supported)");
  long d = lat.d;
  TriplePointModule out;
  out.s = (d % 3 == 0) ? spectrum.mult[d / 3] : 0;
  if (out.s > d - 2)
    fail(Errc::bound_violated, "s = " + std::to_string(out.s) + " exceeds d-2 = " +
                                   std::to_string(d - 2));
  out.decomposition = "(C[t,t^-1]/(t^3-1))^" + std::to_string(out.s) +
                      " + (C[t,t^-1]/(t-1))^" + std::to_string(d - 1 - out.s);
  return out;
}

}  // namespace milnor
