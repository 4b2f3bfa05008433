#include <doctest.h>

#include <random>

#include "milnor/linalg.hpp"

#include "../common/oracles.hpp"

using namespace milnor;

namespace {
Matrix<Rat> to_matrix(const std::vector<std::vector<Rat>>& rows) {
  Matrix<Rat> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}
}  // namespace

TEST_CASE("row echelon rank on known matrices") {
  CHECK(rank_of(to_matrix({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})) == 1);
  CHECK(rank_of(to_matrix({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}})) == 2);
  CHECK(rank_of(to_matrix({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}})) == 0);
  // fractions survive elimination exactly
  CHECK(rank_of(to_matrix({{Rat(1, 3), Rat(1, 6)}, {Rat(2, 3), Rat(1, 3)}})) == 1);
}

TEST_CASE("rank agrees with the minor oracle on random small matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int nr = 1 + static_cast<int>(rng() % 5);
    int nc = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<Rat>> rows(nr, std::vector<Rat>(nc));
    for (auto& row : rows)
      for (auto& x : row) x = Rat(testoracle::small_int(rng, 3), 1 + rng() % 3);
    CHECK(rank_of(to_matrix(rows), Exec::serial) == testoracle::rank_by_minors(rows));
  }
}

TEST_CASE("serial and parallel elimination produce identical matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int nr = 10 + static_cast<int>(rng() % 25);
    int nc = 5 + static_cast<int>(rng() % 20);
    Matrix<Rat> a(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) a.at(i, j) = Rat(testoracle::small_int(rng, 9), 1 + rng() % 5);
    Matrix<Rat> b = a;
    int ra = row_echelon(a, Exec::serial);
    int rb = row_echelon(b, Exec::parallel);
    REQUIRE(ra == rb);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) CHECK(a.at(i, j) == b.at(i, j));
  }
}

TEST_CASE("kernel vectors are genuine kernel elements") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int nr = 1 + static_cast<int>(rng() % 4);
    int nc = 1 + static_cast<int>(rng() % 6);
    Matrix<Rat> m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m.at(i, j) = Rat(testoracle::small_int(rng, 4));
    auto kernel = kernel_basis(m, Exec::serial);
    CHECK(static_cast<int>(kernel.size()) == nc - rank_of(m));
    for (const auto& v : kernel) {
      for (int i = 0; i < nr; ++i) {
        Rat dot(0);
        for (int j = 0; j < nc; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("SpanBasis tracks membership incrementally") {
  SpanBasis<Rat> basis(3);
  CHECK(basis.insert({Rat(1), Rat(0), Rat(0)}));
  CHECK(basis.insert({Rat(1), Rat(1), Rat(0)}));
  CHECK(!basis.insert({Rat(3), Rat(2), Rat(0)}));  // dependent on the first two
  CHECK(basis.rank() == 2);
  CHECK(basis.contains({Rat(0), Rat(5), Rat(0)}));
  CHECK(!basis.contains({Rat(0), Rat(0), Rat(1)}));
  CHECK(basis.insert({Rat(0), Rat(0), Rat(-2)}));
  CHECK(basis.rank() == 3);
}

TEST_CASE("coordinates_in solves exactly or reports failure") {
  std::vector<std::vector<Rat>> basis = {{Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(1), Rat(1)}};
  std::vector<Rat> target = {Rat(2), Rat(5), Rat(1)};
  auto c = coordinates_in(basis, target);
  REQUIRE(c.has_value());
  for (int j = 0; j < 3; ++j) {
    Rat sum = (*c)[0] * basis[0][j] + (*c)[1] * basis[1][j];
    CHECK(sum == target[j]);
  }
  CHECK(!coordinates_in(basis, {Rat(0), Rat(0), Rat(7)}).has_value());
}
