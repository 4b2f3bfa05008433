#include "milnor/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {

namespace {

void check_degree(const IntersectionLattice& lat, int i, int max_degree) {
  if (lat.d < 1) fail(Errc::invalid_dimension, "empty arrangement");
  if (i < 0 || i > max_degree)
    fail(Errc::invalid_dimension, "homology degree " + std::to_string(i) + " out of range 0.." +
                                      std::to_string(max_degree));
}

std::vector<long> orders_from_witnesses(const IntersectionLattice& lat,
                                        const std::vector<std::vector<long>>& witnesses) {
  std::vector<long> out;
  for (long e : divisors(lat.d)) {
    bool ok = true;
    for (const auto& ws : witnesses) {
      bool found = false;
      for (long w : ws) found = found || (w % e == 0);
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

}  // namespace

std::vector<std::vector<long>> witness_multisets(const IntersectionLattice& lat, int i,
                                                 bool dense_only) {
  check_degree(lat, i, lat.ambient_dim);
  int max_codim = std::min(i + 1, lat.ambient_dim + 1);
  std::vector<std::vector<long>> per_h(lat.d);
  for (const auto& f : lat.flats) {
    if (f.codim > max_codim) continue;
    if (dense_only && !f.dense) continue;
    for (int h : f.hyperplanes) per_h[h].push_back(f.multiplicity);
  }
  for (auto& ws : per_h) std::sort(ws.begin(), ws.end());
  return per_h;
}

std::vector<long> admissible_orders(const IntersectionLattice& lat, int i, bool dense_only) {
  check_degree(lat, i, lat.ambient_dim);
  if (i == lat.ambient_dim) return divisors(lat.d);
  return orders_from_witnesses(lat, witness_multisets(lat, i, dense_only));
}

std::vector<bool> relprime_shortcut(const IntersectionLattice& lat, bool dense_only) {
  if (lat.d < 1) fail(Errc::invalid_dimension, "empty arrangement");
  std::vector<bool> out;
  for (int i = 1; i <= lat.ambient_dim - 1; ++i) {
    auto witnesses = witness_multisets(lat, i, dense_only);
    bool shortcut = false;
    for (const auto& ws : witnesses) {
      bool all_coprime = true;
      for (long w : ws) all_coprime = all_coprime && std::gcd(w, static_cast<long>(lat.d)) == 1;
      if (all_coprime) {
        shortcut = true;
        break;
      }
    }
    out.push_back(shortcut);
  }
  return out;
}

std::vector<long> cover_orders(long d, long e) {
  if (d < 1 || e < 1) fail(Errc::invalid_dimension, "cover_orders needs d >= 1, e >= 1");
  return divisors(std::gcd(d, e));
}

bool local_system_nonvanishing(const IntersectionLattice& lat, long e, int i) {
  if (e < 2) fail(Errc::invalid_dimension, "local system order must be >= 2");
  check_degree(lat, i, lat.ambient_dim - 1);
  if (i < 1) fail(Errc::invalid_dimension, "local system degree must be in 1..n-1");
  int max_codim = i + 1;
  for (const auto& f : lat.flats)
    if (f.codim <= max_codim && f.multiplicity % e == 0) return true;
  return false;
}

EigenvalueSpectrum local_charpoly_ordinary(long m) {
  if (m < 2) fail(Errc::invalid_dimension, "ordinary multiple point needs multiplicity >= 2");
  EigenvalueSpectrum s;
  s.order = m;
  s.mult.assign(m, m - 2);
  s.mult[0] = m - 1;
  return s;
}

long local_eigenvalue_order_lcm(long m) {
  EigenvalueSpectrum s = local_charpoly_ordinary(m);
  long l = 1;
  for (long c = 0; c < s.order; ++c)
    if (s.mult[c] > 0) l = std::lcm(l, s.order / std::gcd(c, s.order));
  return l;
}

std::vector<long> refined_orders(const IntersectionLattice& lat, int i) {
  check_degree(lat, i, lat.ambient_dim - 1);
  int max_codim = i + 1;
  std::vector<std::vector<long>> per_h(lat.d);
  for (const auto& f : lat.flats) {
    if (f.codim > max_codim) continue;
    long w = f.multiplicity;
    if (f.codim == 2 && f.multiplicity >= 2) w = local_eigenvalue_order_lcm(f.multiplicity);
    for (int h : f.hyperplanes) per_h[h].push_back(w);
  }
  for (auto& ws : per_h) std::sort(ws.begin(), ws.end());
  return orders_from_witnesses(lat, per_h);
}

}  // namespace milnor
