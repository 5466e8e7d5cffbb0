#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "centra/elimination.hpp"
#include "centra/matrix.hpp"

namespace centra {

inline constexpr std::size_t kDefaultOracleMaxN = 40;

/// Cap on the matrix size the oracle accepts: CENTRA_MAX_N if set and valid,
/// otherwise kDefaultOracleMaxN.
std::size_t oracle_max_n_from_env();

struct OracleOptions {
  std::size_t max_n = kDefaultOracleMaxN;
  Execution execution = Execution::Parallel;
};

/// The linear map X -> vec(AX - XA) on column-stacked vectors, as an n^2 x n^2
/// matrix.
template <ExactField F>
struct SylvesterSystem {
  Matrix<F> coefficients;
  Matrix<F> source;
};

template <ExactField F>
SylvesterSystem<F> sylvester_system(const Matrix<F>& a, const OracleOptions& opts = {}) {
  require_square(a, "commutant oracle");
  const std::size_t n = a.rows();
  if (n > opts.max_n)
    fail(ErrorCode::TooLarge, "n=" + std::to_string(n) + " exceeds the oracle cap " + std::to_string(opts.max_n));
  const std::size_t nn = n * n;
  Matrix<F> m(a.field(), nn, nn);
  // row (r, c) -> c*n + r; unknown X[k][c] -> c*n + k
  const std::ptrdiff_t cols = std::ptrdiff_t(n);
#pragma omp parallel for schedule(static) if (opts.execution == Execution::Parallel && n > 8)
  for (std::ptrdiff_t ci = 0; ci < cols; ++ci) {
    const auto c = std::size_t(ci);
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t row = c * n + r;
      for (std::size_t k = 0; k < n; ++k) {
        if (!a(r, k).is_zero()) m(row, c * n + k) = m(row, c * n + k) + a(r, k);
        if (!a(k, c).is_zero()) m(row, k * n + r) = m(row, k * n + r) - a(k, c);
      }
    }
  }
  return {std::move(m), a};
}

template <ExactField F>
Matrix<F> unvec(const F& field, const std::vector<ElementOf<F>>& v, std::size_t n) {
  Matrix<F> x(field, n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) x(r, c) = v[c * n + r];
  return x;
}

template <ExactField F>
std::vector<Matrix<F>> commutant_basis(const Matrix<F>& a, const OracleOptions& opts = {}) {
  const auto sys = sylvester_system(a, opts);
  std::vector<Matrix<F>> out;
  for (const auto& v : kernel_basis(sys.coefficients, opts.execution)) out.push_back(unvec(a.field(), v, a.rows()));
  return out;
}

template <ExactField F>
std::size_t commutant_dim(const Matrix<F>& a, const OracleOptions& opts = {}) {
  const auto sys = sylvester_system(a, opts);
  return sys.coefficients.cols() - rank(sys.coefficients, opts.execution);
}

template <ExactField F>
bool commutes(const Matrix<F>& a, const Matrix<F>& x) {
  Matrix<F>::same_shape(a, x);
  require_square(a, "commutes");
  return commutator(a, x).is_zero();
}

}  // namespace centra
