#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "centra/canonical_forms.hpp"
#include "centra/elimination.hpp"
#include "centra/matrix.hpp"

namespace centra {

/// Names one free parameter of a centralizer: the Z(C)-coordinate `zc_index`
/// of the `diagonal`-th Toeplitz family in the cell coupling chain
/// `row_chain` to chain `col_chain`.  All indices are 1-based.
struct ParameterLabel {
  std::size_t row_chain = 1;
  std::size_t col_chain = 1;
  std::size_t diagonal = 1;
  std::size_t zc_index = 1;

  friend bool operator==(const ParameterLabel&, const ParameterLabel&) = default;
  friend auto operator<=>(const ParameterLabel&, const ParameterLabel&) = default;
};

template <ExactField F>
struct CentralizerBasis {
  Matrix<F> generator;
  std::vector<Matrix<F>> basis;
  std::vector<ParameterLabel> layout;

  std::size_t dim() const { return basis.size(); }
};

// ---------------------------------------------------------------------------
// Z(C) for a companion matrix C

/// The element [v, Cv, ..., C^(s-1) v] of Z(C).
template <ExactField F>
Matrix<F> zc_element(const Matrix<F>& c, const std::vector<ElementOf<F>>& v) {
  require_square(c, "zc_element");
  const std::size_t s = c.rows();
  if (v.size() != s)
    fail(ErrorCode::ShapeMismatch, "Z(C) parameter has length " + std::to_string(v.size()) + ", need " +
                                       std::to_string(s));
  Matrix<F> x(c.field(), s, s);
  std::vector<ElementOf<F>> col = v;
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < s; ++i) x(i, j) = col[i];
    if (j + 1 == s) break;
    std::vector<ElementOf<F>> next(s, c.field().zero());
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k)
        if (!c(i, k).is_zero()) next[i] = next[i] + c(i, k) * col[k];
    col = std::move(next);
  }
  return x;
}

template <ExactField F>
std::vector<ElementOf<F>> unit_vector(const F& field, std::size_t size, std::size_t index) {
  std::vector<ElementOf<F>> v(size, field.zero());
  v[index] = field.one();
  return v;
}

template <ExactField F>
CentralizerBasis<F> zc_basis(const Matrix<F>& c) {
  require_square(c, "zc_basis");
  CentralizerBasis<F> out{c, {}, {}};
  for (std::size_t k = 0; k < c.rows(); ++k) {
    out.basis.push_back(zc_element(c, unit_vector(c.field(), c.rows(), k)));
    out.layout.push_back({1, 1, 1, k + 1});
  }
  return out;
}

/// Rebuilds the element of Z(C) with the given last row.  The first column
/// follows from x_{s-i,1} = c_{s-i} x_{s,1} + ... + c_{s-1} x_{s,i} + x_{s,i+1}.
template <ExactField F>
Matrix<F> last_row_reconstruct(const Matrix<F>& c, const std::vector<ElementOf<F>>& last_row) {
  require_square(c, "last_row_reconstruct");
  const std::size_t s = c.rows();
  if (last_row.size() != s) fail(ErrorCode::ShapeMismatch, "last row has the wrong length");
  // coefficient c_k sits negated in the last column of C
  std::vector<ElementOf<F>> coeff(s);
  for (std::size_t k = 0; k < s; ++k) coeff[k] = -c(k, s - 1);
  std::vector<ElementOf<F>> first(s, c.field().zero());
  first[s - 1] = last_row[0];
  for (std::size_t i = 1; i < s; ++i) {
    // 0-based row s-1-i
    auto acc = last_row[i];
    for (std::size_t t = 0; t < i; ++t) acc = acc + coeff[s - i + t] * last_row[t];
    first[s - 1 - i] = acc;
  }
  return zc_element(c, first);
}

/// Strictly upper triangular Toeplitz matrix whose k-th superdiagonal is the
/// k-th entry of the last row of x.
template <ExactField F>
Matrix<F> tilde(const Matrix<F>& x) {
  require_square(x, "tilde");
  const std::size_t n = x.rows();
  Matrix<F> t(x.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) t(r, c) = x(n - 1, c - r - 1);
  return t;
}

/// Solution set of E X + C T = T C + Y E for X in Z(C) + tilde(.)
template <ExactField F>
struct CoupledCellSolution {
  Matrix<F> y;                      ///< forced to equal X
  Matrix<F> t_particular;           ///< tilde(X)
  CentralizerBasis<F> homogeneous;  ///< T - tilde(X) ranges over Z(C)
};

template <ExactField F>
CoupledCellSolution<F> solve_coupled_cell(const Matrix<F>& c, const Matrix<F>& e, const Matrix<F>& x) {
  require_square(c, "solve_coupled_cell");
  if (e.rows() != c.rows() || x.rows() != c.rows() || !e.is_square() || !x.is_square())
    fail(ErrorCode::ShapeMismatch, "C, E and X must share one square shape");
  auto t = tilde(x);
  const auto residual = e * x + c * t - t * c - x * e;
  if (!residual.is_zero()) fail(ErrorCode::NoSolution, "X is not of the form X' + tilde(A) with X' in Z(C)");
  return {x, std::move(t), zc_basis(c)};
}

// ---------------------------------------------------------------------------
// Toeplitz families and the centralizer of a generalized Jordan matrix

namespace detail {

/// F_1..F_len of one cell.  E-kind: F_d = fresh_d + tilde(F_{d-1}); first
/// kind: F_d = fresh_d.
template <ExactField F>
std::vector<Matrix<F>> chained_family(std::vector<Matrix<F>> fresh, FormKind kind) {
  if (kind == FormKind::EKind)
    for (std::size_t d = 1; d < fresh.size(); ++d) fresh[d] = fresh[d] + tilde(fresh[d - 1]);
  return fresh;
}

/// Diagonal index (1-based, 0 = structurally zero) of block (x, y) inside an
/// a-by-b cell; taller cells are bottom aligned, wider ones left aligned.
inline long cell_diagonal(std::size_t x, std::size_t y, std::size_t a, std::size_t b) {
  return long(x) - long(y) + 1 - (a > b ? long(a - b) : 0L);
}

template <ExactField F>
void place_cell(Matrix<F>& target, std::size_t row0, std::size_t col0, std::size_t a, std::size_t b,
                const std::vector<Matrix<F>>& family) {
  const std::size_t s = family.front().rows();
  for (std::size_t x = 1; x <= a; ++x)
    for (std::size_t y = 1; y <= b; ++y) {
      const long d = cell_diagonal(x, y, a, b);
      if (d >= 1) target.set_block(row0 + (x - 1) * s, col0 + (y - 1) * s, family[std::size_t(d - 1)]);
    }
}

/// Basis family for parameter (diagonal d0, coordinate k): e_k's Z(C) element
/// on diagonal d0, propagated down the chain.
template <ExactField F>
std::vector<Matrix<F>> unit_family(const Matrix<F>& c, std::size_t len, std::size_t d0, std::size_t k,
                                   FormKind kind) {
  const std::size_t s = c.rows();
  std::vector<Matrix<F>> fresh(len, Matrix<F>(c.field(), s, s));
  fresh[d0 - 1] = zc_element(c, unit_vector(c.field(), s, k - 1));
  return chained_family(std::move(fresh), kind);
}

}  // namespace detail

/// Centralizer of one generalized Jordan block: lower block-triangular block
/// Toeplitz matrices, ell*s parameters.
template <ExactField F>
CentralizerBasis<F> zg_block_basis(const Poly<F>& p, std::size_t ell, FormKind kind) {
  const auto g = gj_block(p, ell, kind);
  const auto c = companion(p);
  const std::size_t s = c.rows();
  CentralizerBasis<F> out{g, {}, {}};
  for (std::size_t d = 1; d <= ell; ++d)
    for (std::size_t k = 1; k <= s; ++k) {
      Matrix<F> x(p.field(), s * ell, s * ell);
      detail::place_cell(x, 0, 0, ell, ell, detail::unit_family(c, ell, d, k, kind));
      out.basis.push_back(std::move(x));
      out.layout.push_back({1, 1, d, k});
    }
  return out;
}

/// Parameter labels of Z(G) in emission order: chain pair, then diagonal,
/// then Z(C) coordinate.
inline std::vector<ParameterLabel> centralizer_layout(const SegreData& segre, std::size_t s) {
  std::vector<ParameterLabel> labels;
  for (std::size_t i = 1; i <= segre.m(); ++i)
    for (std::size_t j = 1; j <= segre.m(); ++j) {
      const std::size_t len = std::min(segre.alpha[i - 1], segre.alpha[j - 1]);
      for (std::size_t d = 1; d <= len; ++d)
        for (std::size_t k = 1; k <= s; ++k) labels.push_back({i, j, d, k});
    }
  return labels;
}

template <ExactField F>
CentralizerBasis<F> zg_basis(const CanonicalSpec<F>& spec) {
  const auto& segre = spec.segre;
  const auto c = companion(spec.p);
  const std::size_t s = spec.s();
  CentralizerBasis<F> out{gj_form(spec), {}, centralizer_layout(segre, s)};
  out.basis.resize(out.layout.size());
  const std::ptrdiff_t count = std::ptrdiff_t(out.layout.size());
#pragma omp parallel for schedule(dynamic) if (count > 64)
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    const auto& lab = out.layout[std::size_t(idx)];
    const std::size_t a = segre.alpha[lab.row_chain - 1];
    const std::size_t b = segre.alpha[lab.col_chain - 1];
    Matrix<F> x(spec.field(), spec.n(), spec.n());
    const std::size_t row0 = (segre.sigma[lab.row_chain - 1] - a) * s;
    const std::size_t col0 = (segre.sigma[lab.col_chain - 1] - b) * s;
    detail::place_cell(x, row0, col0, a, b, detail::unit_family(c, std::min(a, b), lab.diagonal, lab.zc_index, spec.kind));
    out.basis[std::size_t(idx)] = std::move(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer of the generalized Weyr matrix

/// Z(W) obtained by transporting Z(G) through the Weyr permutation: K = P^-1 X P.
template <ExactField F>
CentralizerBasis<F> zw_basis(const CanonicalSpec<F>& spec) {
  auto zg = zg_basis(spec);
  const auto perm = weyr_permutation(spec);
  CentralizerBasis<F> out{weyr_form(spec), {}, std::move(zg.layout)};
  out.basis.reserve(zg.basis.size());
  for (const auto& x : zg.basis) out.basis.push_back(conjugate_by_permutation(x, perm));
  return out;
}

/// Builds one element of Z(W) level block by level block, never touching the
/// Jordan form.  `fresh(i, j, d)` supplies the free Z(C) summand of family d
/// in cell (i, j).
///
/// K_{r,c} (r <= c, levels) is assembled from K_{r+1,c+1}: the chains that
/// survive to the next level keep their entries, the chains whose top level is
/// c add new columns.  In a new column, a row chain that also lives at level
/// r+1 gets fresh + tilde(entry one level down); a row chain topping out at
/// level r gets a fresh Z(C) block.  Everything else is zero.
template <ExactField F>
Matrix<F> zw_recursive_element(const CanonicalSpec<F>& spec,
                               const std::function<Matrix<F>(std::size_t, std::size_t, std::size_t)>& fresh) {
  const auto& segre = spec.segre;
  const std::size_t s = spec.s();
  const std::size_t levels = segre.levels();
  const auto& tau = segre.tau;
  const F& field = spec.field();
  auto tau_at = [&](std::size_t level) { return level <= levels ? tau[level - 1] : std::size_t{0}; };

  // blocks[r][c] (1-based levels) has tau_r x tau_c cells of size s x s
  std::vector<std::vector<Matrix<F>>> blocks(levels + 2, std::vector<Matrix<F>>(levels + 2));
  for (std::size_t c = levels; c >= 1; --c) {
    for (std::size_t r = c; r >= 1; --r) {
      Matrix<F> k(field, tau_at(r) * s, tau_at(c) * s);
      if (c < levels) {
        const auto& inner = blocks[r + 1][c + 1];
        k.set_block(0, 0, inner);
      }
      for (std::size_t j = tau_at(c + 1) + 1; j <= tau_at(c); ++j) {
        for (std::size_t i = 1; i <= tau_at(r); ++i) {
          const std::size_t ai = segre.alpha[i - 1];
          const std::size_t aj = segre.alpha[j - 1];
          const std::size_t d = std::min(ai, aj) - r + 1;
          Matrix<F> cell = fresh(i, j, d);
          if (i <= tau_at(r + 1) && spec.kind == FormKind::EKind && r + 1 <= c) {
            const auto below = blocks[r + 1][c].block((i - 1) * s, (j - 1) * s, s, s);
            cell = cell + tilde(below);
          }
          k.set_block((i - 1) * s, (j - 1) * s, cell);
        }
      }
      blocks[r][c] = std::move(k);
      if (r == 1) break;
    }
    if (c == 1) break;
  }

  Matrix<F> out(field, spec.n(), spec.n());
  std::size_t row0 = 0;
  for (std::size_t r = 1; r <= levels; ++r) {
    std::size_t col0 = 0;
    for (std::size_t c = 1; c <= levels; ++c) {
      if (r <= c) out.set_block(row0, col0, blocks[r][c]);
      col0 += tau_at(c) * s;
    }
    row0 += tau_at(r) * s;
  }
  return out;
}

/// Z(W) built independently by the level recursion; same labels as zw_basis.
template <ExactField F>
CentralizerBasis<F> zw_basis_recursive(const CanonicalSpec<F>& spec) {
  const auto c = companion(spec.p);
  const std::size_t s = spec.s();
  const Matrix<F> zero(spec.field(), s, s);
  CentralizerBasis<F> out{weyr_form(spec), {}, centralizer_layout(spec.segre, s)};
  for (const auto& lab : out.layout) {
    const auto unit = zc_element(c, unit_vector(spec.field(), s, lab.zc_index - 1));
    out.basis.push_back(zw_recursive_element<F>(spec, [&](std::size_t i, std::size_t j, std::size_t d) {
      return (i == lab.row_chain && j == lab.col_chain && d == lab.diagonal) ? unit : zero;
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimensions

struct DimensionFormulas {
  std::size_t segre;  ///< s * sum (2i-1) alpha_i
  std::size_t weyr;   ///< s * sum tau_j^2
};

inline DimensionFormulas centralizer_dim_formulas(const Partition& alpha, std::size_t s) {
  const auto tau = conjugate_partition(alpha);
  return {s * segre_weighted_sum(alpha), s * sum_of_squares(tau)};
}

inline std::size_t centralizer_dim(const Partition& alpha, std::size_t s) {
  const auto both = centralizer_dim_formulas(alpha, s);
  if (both.segre != both.weyr)
    fail(ErrorCode::FormulaMismatch,
         "segre formula " + std::to_string(both.segre) + " != weyr formula " + std::to_string(both.weyr));
  return both.segre;
}

/// Dimension of the centralizer of a direct sum of primary components with
/// pairwise coprime irreducibles.
template <ExactField F>
std::size_t direct_sum_dim(const std::vector<std::pair<Poly<F>, Partition>>& primaries) {
  for (std::size_t a = 0; a < primaries.size(); ++a)
    for (std::size_t b = a + 1; b < primaries.size(); ++b)
      if (poly_gcd(primaries[a].first, primaries[b].first).degree() != 0)
        fail(ErrorCode::NotCoprime, format_poly(primaries[a].first) + " and " + format_poly(primaries[b].first));
  std::size_t total = 0;
  for (const auto& [p, alpha] : primaries) total += centralizer_dim(alpha, std::size_t(p.degree()));
  return total;
}

// ---------------------------------------------------------------------------
// Determinants and automorphisms of Z(W)

inline std::vector<std::size_t> weyr_level_sizes(const SegreData& segre, std::size_t s) {
  std::vector<std::size_t> sizes;
  for (auto t : segre.tau) sizes.push_back(t * s);
  return sizes;
}

/// det(K) as the product of the determinants of the diagonal level blocks.
template <ExactField F>
ElementOf<F> zw_determinant(const Matrix<F>& k, const CanonicalSpec<F>& spec) {
  if (k.rows() != spec.n() || k.cols() != spec.n())
    fail(ErrorCode::ShapeMismatch, "K is " + Matrix<F>::shape_string(k.rows(), k.cols()) + ", spec needs " +
                                       std::to_string(spec.n()) + "x" + std::to_string(spec.n()));
  const auto layout = BlockLayout::square(weyr_level_sizes(spec.segre, spec.s()));
  for (std::size_t r = 0; r < layout.block_rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!block_extract(k, layout, r, c).is_zero())
        fail(ErrorCode::ShapeMismatch, "K is not block upper triangular over the Weyr levels");
  auto det = spec.field().one();
  for (std::size_t l = 0; l < layout.block_rows(); ++l) det = det * determinant(block_extract(k, layout, l, l));
  return det;
}

/// Closed form prod_k det(D_k)^beta_k, where D_k gathers the leading Z(C)
/// blocks of the chains of length beta_k (read off the first level).
template <ExactField F>
ElementOf<F> zw_grouped_determinant(const Matrix<F>& k, const CanonicalSpec<F>& spec) {
  const auto& segre = spec.segre;
  const std::size_t s = spec.s();
  auto det = spec.field().one();
  std::size_t first_chain = 0;
  for (std::size_t g = 0; g < segre.h(); ++g) {
    const std::size_t width = segre.freq[g] * s;
    const auto group_det = determinant(k.block(first_chain * s, first_chain * s, width, width));
    for (std::size_t e = 0; e < segre.beta[g]; ++e) det = det * group_det;
    first_chain = segre.cumfreq[g];
  }
  return det;
}

template <ExactField F>
bool is_automorphism(const Matrix<F>& k, const CanonicalSpec<F>& spec) {
  const auto w = weyr_form(spec);
  if (k.rows() != w.rows() || k.cols() != w.cols()) fail(ErrorCode::ShapeMismatch, "K has the wrong size");
  if (!commutator(w, k).is_zero()) fail(ErrorCode::NotInCentralizer, "K does not commute with W");
  return !zw_determinant(k, spec).is_zero();
}

// ---------------------------------------------------------------------------
// Sampling

template <ExactField F>
Matrix<F> sample_element(const CentralizerBasis<F>& basis, const std::vector<ElementOf<F>>& coeffs) {
  if (coeffs.size() != basis.dim())
    fail(ErrorCode::LengthMismatch, std::to_string(coeffs.size()) + " coefficients for a basis of size " +
                                        std::to_string(basis.dim()));
  const auto& g = basis.generator;
  Matrix<F> out(g.field(), g.rows(), g.cols());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) out = out + basis.basis[i].scaled(coeffs[i]);
  return out;
}

template <ExactField F>
std::vector<ElementOf<F>> random_coefficients(const F& field, std::size_t count, Rng& rng) {
  std::vector<ElementOf<F>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(field.random(rng));
  return out;
}

template <ExactField F>
Matrix<F> sample_element(const CentralizerBasis<F>& basis, std::uint64_t seed) {
  Rng rng(seed);
  return sample_element(basis, random_coefficients(basis.generator.field(), basis.dim(), rng));
}

// ---------------------------------------------------------------------------
// Span checks on vectorizations

template <ExactField F>
std::size_t basis_rank(const std::vector<Matrix<F>>& mats) {
  if (mats.empty()) return 0;
  std::vector<std::vector<ElementOf<F>>> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) rows.push_back(m.vec());
  return rank_of_rows(mats.front().field(), rows);
}

/// True iff the two families span the same subspace.
template <ExactField F>
bool same_span(const std::vector<Matrix<F>>& a, const std::vector<Matrix<F>>& b) {
  std::vector<Matrix<F>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = basis_rank(a);
  return ra == basis_rank(b) && ra == basis_rank(both);
}

}  // namespace centra
