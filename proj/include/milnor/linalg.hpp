#pragma once

#include <optional>
#include <vector>

#include "milnor/numeric.hpp"
#include "milnor/threads.hpp"

namespace milnor {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, K(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const K& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

// Forward elimination to row-echelon form.  Pivot selection is by row index
// (first row with a nonzero entry in the current column), so serial and
// parallel execution perform the identical arithmetic per row and produce
// bitwise-equal results; the parallel mode distributes the independent row
// updates of each elimination step across threads.
template <class K>
int row_echelon(Matrix<K>& m, Exec exec = Exec::parallel) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const int base = rank, bcol = col, nrows = m.rows(), ncols = m.cols();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel && nrows - base > 8)
#endif
    for (int r = base + 1; r < nrows; ++r) {
      if (is_zero(m.at(r, bcol))) continue;
      K f = m.at(r, bcol) / m.at(base, bcol);
      m.at(r, bcol) = K(0);
      for (int c = bcol + 1; c < ncols; ++c) m.at(r, c) -= f * m.at(base, c);
    }
    (void)exec;
    ++rank;
  }
  return rank;
}

template <class K>
int rank_of(Matrix<K> m, Exec exec = Exec::parallel) {
  return row_echelon(m, exec);
}

// Basis of the right kernel {x : M x = 0}; one vector per free column,
// in ascending free-column order, with the free coordinate set to 1.
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m, Exec exec = Exec::parallel) {
  int rank = row_echelon(m, exec);
  // Reduce upwards so each pivot column is standard.
  std::vector<int> pivot_col(rank);
  {
    int r = 0;
    for (int c = 0; c < m.cols() && r < rank; ++c) {
      if (!is_zero(m.at(r, c))) pivot_col[r++] = c;
    }
  }
  for (int r = rank - 1; r >= 0; --r) {
    int pc = pivot_col[r];
    K inv = K(1) / m.at(r, pc);
    for (int c = pc; c < m.cols(); ++c) m.at(r, c) = K(m.at(r, c) * inv);
    for (int above = 0; above < r; ++above) {
      if (is_zero(m.at(above, pc))) continue;
      K f = m.at(above, pc);
      for (int c = pc; c < m.cols(); ++c) m.at(above, c) -= f * m.at(r, c);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  std::vector<std::vector<K>> basis;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[fc] = K(1);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = K(-m.at(r, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental echelon basis for span-membership queries (used by the
// lattice closure).  Rows are kept reduced with unit leading entries.
template <class K>
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

  // Reduce v against the basis; returns the residual (zero iff v in span).
  std::vector<K> reduce(std::vector<K> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[lead_[i]];
      if (is_zero(c)) continue;
      K f = c;
      for (int j = lead_[i]; j < dim_; ++j) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    std::vector<K> r = reduce(v);
    for (const K& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  // Insert v if independent; returns true when the rank grew.
  bool insert(const std::vector<K>& v) {
    std::vector<K> r = reduce(v);
    int lead = -1;
    for (int j = 0; j < dim_; ++j) {
      if (!is_zero(r[j])) {
        lead = j;
        break;
      }
    }
    if (lead < 0) return false;
    K inv = K(1) / r[lead];
    for (int j = lead; j < dim_; ++j) r[j] = K(r[j] * inv);
    rows_.push_back(std::move(r));
    lead_.push_back(lead);
    // keep rows sorted by leading column for deterministic reduction order
    for (std::size_t i = rows_.size() - 1; i > 0 && lead_[i] < lead_[i - 1]; --i) {
      std::swap(rows_[i], rows_[i - 1]);
      std::swap(lead_[i], lead_[i - 1]);
    }
    return true;
  }

 private:
  int dim_;
  std::vector<std::vector<K>> rows_;
  std::vector<int> lead_;
};

// Rank of a set of vectors.
template <class K>
int rank_of_vectors(const std::vector<std::vector<K>>& vs, int dim) {
  SpanBasis<K> b(dim);
  for (const auto& v : vs) b.insert(v);
  return b.rank();
}

// Coordinates of v in the span of `basis` (vectors assumed independent);
// nullopt when v is outside the span.
template <class K>
std::optional<std::vector<K>> coordinates_in(const std::vector<std::vector<K>>& basis,
                                             const std::vector<K>& v) {
  if (basis.empty()) return std::nullopt;
  int dim = static_cast<int>(basis[0].size());
  int n = static_cast<int>(basis.size());
  Matrix<K> m(dim, n + 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < dim; ++i) m.at(i, j) = basis[j][i];
  for (int i = 0; i < dim; ++i) m.at(i, n) = v[i];
  auto ker = kernel_basis(m, Exec::serial);
  // A kernel vector with nonzero last coordinate encodes v as a combination.
  for (const auto& k : ker) {
    if (!is_zero(k[n])) {
      K s = K(0) - k[n];
      std::vector<K> coords(n);
      for (int j = 0; j < n; ++j) coords[j] = K(k[j] / s);
      return coords;
    }
  }
  return std::nullopt;
}

}  // namespace milnor
