#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "centra/error.hpp"
#include "centra/field.hpp"
#include "centra/poly.hpp"

namespace centra {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using Element = ElementOf<F>;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}
  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      fail(ErrorCode::ShapeMismatch, std::to_string(data_.size()) + " entries for a " + shape_string(rows_, cols_));
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Element>& entries() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) fail(ErrorCode::ShapeMismatch, "block outside matrix");
    Matrix b(field_, h, w);
    for (std::size_t r = 0; r < h; ++r)
      for (std::size_t c = 0; c < w; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::ShapeMismatch, "block outside matrix");
    same_field(*this, b);
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  std::vector<Element> column(std::size_t c) const {
    std::vector<Element> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  std::vector<Element> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }

  /// Column-stacking vectorization.
  std::vector<Element> vec() const {
    std::vector<Element> v;
    v.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  Matrix scaled(const Element& k) const {
    Matrix out = *this;
    for (auto& e : out.data_) e = e * k;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    same_field(a, b);
    if (a.cols_ != b.rows_)
      fail(ErrorCode::ShapeMismatch, shape_string(a.rows_, a.cols_) + " times " + shape_string(b.rows_, b.cols_));
    Matrix out(a.field_, a.rows_, b.cols_);
    const std::ptrdiff_t n = std::ptrdiff_t(a.rows_);
#pragma omp parallel for schedule(static) if (a.rows_ * a.cols_ * b.cols_ > 200000)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(std::size_t(i), k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Element& bkj = b(k, j);
          if (!bkj.is_zero()) out(std::size_t(i), j) = out(std::size_t(i), j) + aik * bkj;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  static void same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) fail(ErrorCode::FieldMismatch, a.field_.selector() + " vs " + b.field_.selector());
  }

  static void same_shape(const Matrix& a, const Matrix& b) {
    same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(ErrorCode::ShapeMismatch, shape_string(a.rows_, a.cols_) + " vs " + shape_string(b.rows_, b.cols_));
  }

  static std::string shape_string(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

template <ExactField F>
void require_square(const Matrix<F>& a, const char* what) {
  if (!a.is_square()) fail(ErrorCode::NotSquare, std::string(what) + " needs a square matrix, got " +
                                                     Matrix<F>::shape_string(a.rows(), a.cols()));
}

/// AB - BA.
template <ExactField F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

// ---------------------------------------------------------------------------
// Block grids

/// Row and column cut offsets of a block grid: cuts start at 0, end at the
/// matrix size, and strictly increase.
struct BlockLayout {
  std::vector<std::size_t> row_cuts;
  std::vector<std::size_t> col_cuts;

  std::size_t block_rows() const { return row_cuts.empty() ? 0 : row_cuts.size() - 1; }
  std::size_t block_cols() const { return col_cuts.empty() ? 0 : col_cuts.size() - 1; }

  /// Cuts from consecutive block sizes.
  static BlockLayout from_sizes(const std::vector<std::size_t>& row_sizes, const std::vector<std::size_t>& col_sizes);
  static BlockLayout square(const std::vector<std::size_t>& sizes) { return from_sizes(sizes, sizes); }

  void validate() const;
};

inline BlockLayout BlockLayout::from_sizes(const std::vector<std::size_t>& row_sizes,
                                           const std::vector<std::size_t>& col_sizes) {
  BlockLayout layout;
  layout.row_cuts.push_back(0);
  for (auto s : row_sizes) layout.row_cuts.push_back(layout.row_cuts.back() + s);
  layout.col_cuts.push_back(0);
  for (auto s : col_sizes) layout.col_cuts.push_back(layout.col_cuts.back() + s);
  layout.validate();
  return layout;
}

inline void BlockLayout::validate() const {
  auto check = [](const std::vector<std::size_t>& cuts, const char* which) {
    if (cuts.empty() || cuts.front() != 0) fail(ErrorCode::ShapeMismatch, std::string(which) + " cuts must start at 0");
    for (std::size_t i = 1; i < cuts.size(); ++i)
      if (cuts[i] <= cuts[i - 1]) fail(ErrorCode::ShapeMismatch, std::string(which) + " cuts must strictly increase");
  };
  check(row_cuts, "row");
  check(col_cuts, "column");
}

template <ExactField F>
Matrix<F> block_assemble(const F& field, const BlockLayout& layout, const std::vector<std::vector<Matrix<F>>>& grid) {
  layout.validate();
  if (grid.size() != layout.block_rows()) fail(ErrorCode::ShapeMismatch, "grid row count does not match layout");
  Matrix<F> out(field, layout.row_cuts.back(), layout.col_cuts.back());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != layout.block_cols()) fail(ErrorCode::ShapeMismatch, "ragged block grid");
    const std::size_t h = layout.row_cuts[i + 1] - layout.row_cuts[i];
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      const std::size_t w = layout.col_cuts[j + 1] - layout.col_cuts[j];
      const auto& b = grid[i][j];
      if (b.rows() != h || b.cols() != w)
        fail(ErrorCode::ShapeMismatch, "block (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                                           Matrix<F>::shape_string(b.rows(), b.cols()) + ", layout wants " +
                                           Matrix<F>::shape_string(h, w));
      out.set_block(layout.row_cuts[i], layout.col_cuts[j], b);
    }
  }
  return out;
}

template <ExactField F>
Matrix<F> block_extract(const Matrix<F>& m, const BlockLayout& layout, std::size_t i, std::size_t j) {
  layout.validate();
  if (layout.row_cuts.back() != m.rows() || layout.col_cuts.back() != m.cols())
    fail(ErrorCode::ShapeMismatch, "layout does not cover the matrix");
  if (i >= layout.block_rows() || j >= layout.block_cols()) fail(ErrorCode::ShapeMismatch, "block index out of range");
  return m.block(layout.row_cuts[i], layout.col_cuts[j], layout.row_cuts[i + 1] - layout.row_cuts[i],
                 layout.col_cuts[j + 1] - layout.col_cuts[j]);
}

template <ExactField F>
Matrix<F> block_diagonal(const F& field, const std::vector<Matrix<F>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    require_square(b, "block_diagonal");
    n += b.rows();
  }
  Matrix<F> out(field, n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    out.set_block(at, at, b);
    at += b.rows();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Block permutations

/// Permutation of equal-width column groups.  `order[t]` is the (0-based)
/// original group placed at position t, so P = [I_(order[0]) I_(order[1]) ...].
struct BlockPermutation {
  std::size_t block_size = 1;
  std::vector<std::size_t> order;

  std::size_t size() const { return block_size * order.size(); }

  void validate() const {
    std::vector<bool> seen(order.size(), false);
    for (auto o : order) {
      if (o >= order.size() || seen[o]) fail(ErrorCode::BadPermutation, "block order is not a bijection");
      seen[o] = true;
    }
    if (block_size == 0) fail(ErrorCode::BadPermutation, "block size must be positive");
  }

  BlockPermutation inverse() const {
    validate();
    BlockPermutation inv{block_size, std::vector<std::size_t>(order.size())};
    for (std::size_t t = 0; t < order.size(); ++t) inv.order[order[t]] = t;
    return inv;
  }

  static BlockPermutation identity(std::size_t block_size, std::size_t blocks) {
    BlockPermutation p{block_size, std::vector<std::size_t>(blocks)};
    std::iota(p.order.begin(), p.order.end(), std::size_t{0});
    return p;
  }
};

template <ExactField F>
Matrix<F> permutation_matrix(const F& field, const BlockPermutation& perm) {
  perm.validate();
  const std::size_t s = perm.block_size;
  Matrix<F> p(field, perm.size(), perm.size());
  for (std::size_t t = 0; t < perm.order.size(); ++t)
    for (std::size_t k = 0; k < s; ++k) p(perm.order[t] * s + k, t * s + k) = field.one();
  return p;
}

/// P^-1 a P computed by index remapping.
template <ExactField F>
Matrix<F> conjugate_by_permutation(const Matrix<F>& a, const BlockPermutation& perm) {
  require_square(a, "conjugate_by_permutation");
  perm.validate();
  if (perm.size() != a.rows())
    fail(ErrorCode::BadPermutation, "permutation of size " + std::to_string(perm.size()) + " for a " +
                                        Matrix<F>::shape_string(a.rows(), a.cols()) + " matrix");
  const std::size_t s = perm.block_size;
  Matrix<F> out(a.field(), a.rows(), a.cols());
  for (std::size_t u = 0; u < perm.order.size(); ++u)
    for (std::size_t v = 0; v < perm.order.size(); ++v)
      for (std::size_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < s; ++y) out(u * s + x, v * s + y) = a(perm.order[u] * s + x, perm.order[v] * s + y);
  return out;
}

// ---------------------------------------------------------------------------

/// Sum c_i a^i by Horner's rule.
template <ExactField F>
Matrix<F> eval_poly_at_matrix(const Poly<F>& p, const Matrix<F>& a) {
  require_square(a, "eval_poly_at_matrix");
  if (!(p.field() == a.field())) fail(ErrorCode::FieldMismatch, p.field().selector() + " vs " + a.field().selector());
  const auto id = Matrix<F>::identity(a.field(), a.rows());
  Matrix<F> acc(a.field(), a.rows(), a.cols());
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * a + id.scaled(*it);
  return acc;
}

template <ExactField F>
Matrix<F> matrix_power(const Matrix<F>& a, std::size_t k) {
  require_square(a, "matrix_power");
  Matrix<F> out = Matrix<F>::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace centra
