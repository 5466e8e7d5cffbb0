#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "centra/matrix.hpp"

namespace centra {

/// Which elimination kernel to run.  Both produce identical output: the pivot
/// rule (first nonzero entry scanning down) does not depend on the schedule.
enum class Execution { Serial, Parallel };

template <ExactField F>
struct EchelonForm {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

namespace kernels {

/// Textbook Gauss-Jordan, kept as the reference the parallel kernel is tested
/// against.  `full` also clears entries above each pivot.
template <ExactField F>
EchelonForm<F> eliminate_serial(Matrix<F> m, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const auto inv = inverse(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = full ? 0 : row + 1; r < m.rows(); ++r) {
      if (r == row) continue;
      const auto factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Same elimination with the row updates spread over OpenMP threads.  Only the
/// nonzero columns of the pivot row are touched, which matters for the very
/// sparse commutation systems.
template <ExactField F>
EchelonForm<F> eliminate_parallel(Matrix<F> m, bool full) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t c = col; c < cols; ++c) std::swap(m(pivot, c), m(row, c));
    const auto inv = inverse(m(row, col));
    support.clear();
    for (std::size_t c = col; c < cols; ++c) {
      if (m(row, c).is_zero()) continue;
      m(row, c) = m(row, c) * inv;
      support.push_back(c);
    }
    const std::ptrdiff_t first = full ? 0 : std::ptrdiff_t(row + 1);
    const std::ptrdiff_t last = std::ptrdiff_t(rows);
    const std::size_t work = std::size_t(last - first) * support.size();
#pragma omp parallel for schedule(static) if (work > 4096)
    for (std::ptrdiff_t r = first; r < last; ++r) {
      const auto ur = std::size_t(r);
      if (ur == row || m(ur, col).is_zero()) continue;
      const auto factor = m(ur, col);
      for (std::size_t c : support) m(ur, c) = m(ur, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace kernels

/// Reduced row echelon form.
template <ExactField F>
EchelonForm<F> rref(Matrix<F> m, Execution exec = Execution::Parallel) {
  return exec == Execution::Serial ? kernels::eliminate_serial(std::move(m), true)
                                   : kernels::eliminate_parallel(std::move(m), true);
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m, Execution exec = Execution::Parallel) {
  return exec == Execution::Serial ? kernels::eliminate_serial(m, false).rank()
                                   : kernels::eliminate_parallel(m, false).rank();
}

/// Basis of the right null space.  Each vector has a 1 in its own free
/// coordinate and 0 in every other free coordinate.
template <ExactField F>
std::vector<std::vector<ElementOf<F>>> kernel_basis(const Matrix<F>& a, Execution exec = Execution::Parallel) {
  const auto ech = rref(a, exec);
  const F& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : ech.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<ElementOf<F>>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<ElementOf<F>> v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) v[ech.pivot_cols[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField F>
ElementOf<F> determinant(Matrix<F> m) {
  require_square(m, "determinant");
  const F& f = m.field();
  const std::size_t n = m.rows();
  auto det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    const auto p = m(col, col);
    det = det * p;
    const auto inv = inverse(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const auto factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix<F> aug(a.field(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix<F>::identity(a.field(), n));
  auto ech = rref(std::move(aug));
  if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1) fail(ErrorCode::DivisionByZero, "matrix is singular");
  return ech.reduced.block(0, n, n, n);
}

/// Rank of a family of equal-length vectors stacked as rows.
template <ExactField F>
std::size_t rank_of_rows(const F& field, const std::vector<std::vector<ElementOf<F>>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::vector<ElementOf<F>> entries;
  entries.reserve(rows.size() * width);
  for (const auto& r : rows) {
    if (r.size() != width) fail(ErrorCode::ShapeMismatch, "vectors of different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return rank(Matrix<F>(field, rows.size(), width, std::move(entries)));
}

}  // namespace centra
