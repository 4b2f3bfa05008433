// Benchmark for the parallel kernels against their serial reference.  Each
// kernel is run in both modes on identical input; "agree" asserts the results
// are identical, so the benchmark doubles as a determinism check.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "milnor/charpoly.hpp"
#include "milnor/lattice.hpp"
#include "milnor/linalg.hpp"
#include "milnor/threads.hpp"

using namespace milnor;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Matrix<Rat> random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long p = static_cast<long>(rng() % 19) - 9;
      long q = static_cast<long>(rng() % 9) + 1;
      m.at(i, j) = Rat(p, q);
    }
  return m;
}

// Three pencils of `p` lines each through three non-collinear points, a
// worst case for the superabundance kernel: every pencil center has
// multiplicity p, so the interpolation matrices carry real derivative rows.
Arrangement three_pencils(int p) {
  Arrangement a;
  a.dim = 2;
  for (int i = 1; i <= p; ++i) a.hyperplanes.push_back({{Rat(1), Rat(-i), Rat(0)}});
  for (int i = 1; i <= p; ++i) a.hyperplanes.push_back({{Rat(1), Rat(0), Rat(-i)}});
  for (int i = 1; i <= p; ++i) a.hyperplanes.push_back({{Rat(0), Rat(1), Rat(-i)}});
  canonicalize_and_validate(a);
  return a;
}

void report_row(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-34s %10.1f %12.1f %8.2fx   %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();
  int size = 80;
  int pencil = 5;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--size" && i + 1 < argc) size = std::stoi(argv[++i]);
    if (arg == "--pencil" && i + 1 < argc) pencil = std::stoi(argv[++i]);
  }

  std::printf("%d hardware threads available\n", max_threads());
  std::printf("%-34s %10s %12s %9s   %s\n", "kernel", "serial(ms)", "parallel(ms)", "speedup",
              "agree");

  {
    Matrix<Rat> a = random_matrix(size, 42);
    Matrix<Rat> b = a;
    auto t0 = std::chrono::steady_clock::now();
    int r1 = row_echelon(a, Exec::serial);
    double s = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    int r2 = row_echelon(b, Exec::parallel);
    double p = ms_since(t0);
    bool agree = r1 == r2;
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) agree = agree && a.at(i, j) == b.at(i, j);
    std::string name = "rational row echelon " + std::to_string(size) + "x" + std::to_string(size);
    report_row(name.c_str(), s, p, agree);
  }

  Arrangement arr = three_pencils(pencil);
  IntersectionLattice lat = build_lattice(arr);
  {
    IntersectionLattice l1 = lat, l2 = lat;
    auto t0 = std::chrono::steady_clock::now();
    compute_density(arr, l1, Exec::serial);
    double s = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    compute_density(arr, l2, Exec::parallel);
    double p = ms_since(t0);
    bool agree = true;
    for (std::size_t i = 0; i < l1.flats.size(); ++i)
      agree = agree && l1.flats[i].dense == l2.flats[i].dense;
    std::string name = "dense-edge pass (" + std::to_string(lat.flats.size()) + " flats)";
    report_row(name.c_str(), s, p, agree);
  }
  {
    compute_density(arr, lat, Exec::parallel);
    auto t0 = std::chrono::steady_clock::now();
    SpectrumResult r1 = monodromy_spectrum(arr, lat, ExponentConvention::reconciled, Exec::serial);
    double s = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    SpectrumResult r2 =
        monodromy_spectrum(arr, lat, ExponentConvention::reconciled, Exec::parallel);
    double p = ms_since(t0);
    std::string name = "H_1 spectrum (d=" + std::to_string(arr.d()) + ", three pencils)";
    report_row(name.c_str(), s, p, r1.spectrum.mult == r2.spectrum.mult);
  }
  return 0;
}
