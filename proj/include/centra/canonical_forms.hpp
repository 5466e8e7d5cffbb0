#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "centra/elimination.hpp"
#include "centra/irreducibility.hpp"
#include "centra/matrix.hpp"
#include "centra/partition.hpp"
#include "centra/poly.hpp"

namespace centra {

/// E-kind blocks couple consecutive companion blocks through the corner
/// matrix E; first-kind blocks use the identity and need a separable p.
enum class FormKind { EKind, FirstKind };

inline const char* to_string(FormKind k) { return k == FormKind::EKind ? "e" : "first"; }

/// The data (p, alpha, kind) that determines a generalized Jordan matrix G
/// and its generalized Weyr matrix W.
template <ExactField F>
struct CanonicalSpec {
  Poly<F> p;
  FormKind kind = FormKind::EKind;
  SegreData segre;

  std::size_t s() const { return std::size_t(p.degree()); }
  std::size_t n() const { return s() * segre.r(); }
  const F& field() const { return p.field(); }
};

/// Validates the standing hypotheses and fills in the Segre bookkeeping.
template <ExactField F>
CanonicalSpec<F> make_spec(Poly<F> p, const Partition& alpha, FormKind kind, bool assume_irreducible = false) {
  if (is_irreducible(p, assume_irreducible) == Irreducibility::Reducible)
    fail(ErrorCode::NotIrreducible, format_poly(p) + " is reducible over " + p.field().selector());
  if (kind == FormKind::FirstKind && !is_separable(p))
    fail(ErrorCode::NonSeparableFirstKind, format_poly(p) + " is not separable");
  return {std::move(p), kind, segre_indexing(alpha)};
}

/// Companion matrix: ones on the subdiagonal, last column -c_0, ..., -c_{s-1}.
template <ExactField F>
Matrix<F> companion(const Poly<F>& p) {
  if (p.is_zero() || p.degree() < 1) fail(ErrorCode::DegreeZero, "companion matrix needs degree >= 1");
  if (!p.is_monic()) fail(ErrorCode::NotMonic, format_poly(p));
  const F& f = p.field();
  const auto s = std::size_t(p.degree());
  Matrix<F> c(f, s, s);
  for (std::size_t i = 1; i < s; ++i) c(i, i - 1) = f.one();
  for (std::size_t i = 0; i < s; ++i) c(i, s - 1) = -p.coeff(i);
  return c;
}

/// s x s matrix with a single 1 in the top-right corner.
template <ExactField F>
Matrix<F> e_matrix(const F& field, std::size_t s) {
  if (s == 0) fail(ErrorCode::DegreeZero, "E needs s >= 1");
  Matrix<F> e(field, s, s);
  e(0, s - 1) = field.one();
  return e;
}

template <ExactField F>
Matrix<F> coupling_block(const F& field, std::size_t s, FormKind kind) {
  return kind == FormKind::EKind ? e_matrix(field, s) : Matrix<F>::identity(field, s);
}

/// Lower block-bidiagonal generalized Jordan block of size s*ell.
template <ExactField F>
Matrix<F> gj_block(const Poly<F>& p, std::size_t ell, FormKind kind) {
  if (ell == 0) fail(ErrorCode::NonPositivePart, "block multiplicity must be >= 1");
  if (kind == FormKind::FirstKind && !is_separable(p))
    fail(ErrorCode::NonSeparableFirstKind, format_poly(p) + " is not separable");
  const auto c = companion(p);
  const std::size_t s = c.rows();
  const auto e = coupling_block(p.field(), s, kind);
  Matrix<F> g(p.field(), s * ell, s * ell);
  for (std::size_t k = 0; k < ell; ++k) {
    g.set_block(k * s, k * s, c);
    if (k > 0) g.set_block(k * s, (k - 1) * s, e);
  }
  return g;
}

template <ExactField F>
Matrix<F> gj_form(const CanonicalSpec<F>& spec) {
  std::vector<Matrix<F>> blocks;
  for (auto a : spec.segre.alpha) blocks.push_back(gj_block(spec.p, a, spec.kind));
  return block_diagonal(spec.field(), blocks);
}

template <ExactField F>
struct DnSplit {
  Matrix<F> d;  ///< block diagonal of companion matrices
  Matrix<F> n;  ///< the coupling blocks below the diagonal
};

template <ExactField F>
DnSplit<F> dn_split(const CanonicalSpec<F>& spec) {
  const auto g = gj_form(spec);
  const auto c = companion(spec.p);
  std::vector<Matrix<F>> diag(spec.segre.r(), c);
  auto d = block_diagonal(spec.field(), diag);
  auto n = g - d;
  return {std::move(d), std::move(n)};
}

// ---------------------------------------------------------------------------
// Segre -> Weyr reindexing
//
// Chain i (1-based) owns partial chains 1..alpha_i, stored as s-column groups
// sigma_{i-1}+1 .. sigma_i of G.  Level l collects, for every chain with
// alpha_i >= l, its partial chain alpha_i - l + 1; levels are listed from 1 up
// to alpha_1 and chains inside a level in increasing order.

/// 1-based group indices per level, e.g. alpha=(3,2,2) -> {{3,5,7},{2,4,6},{1}}.
inline std::vector<std::vector<std::size_t>> weyr_levels(const SegreData& segre) {
  std::vector<std::vector<std::size_t>> levels;
  for (std::size_t level = 1; level <= segre.levels(); ++level) {
    std::vector<std::size_t> groups;
    for (std::size_t i = 0; i < segre.m(); ++i)
      if (segre.alpha[i] >= level) groups.push_back(segre.sigma[i] - level + 1);
    levels.push_back(std::move(groups));
  }
  return levels;
}

/// Offset (in s-blocks) of chain i at level l in the Weyr ordering; both 1-based.
inline std::size_t weyr_position(const SegreData& segre, std::size_t chain, std::size_t level) {
  std::size_t offset = 0;
  for (std::size_t l = 1; l < level; ++l) offset += segre.tau[l - 1];
  return offset + chain - 1;
}

template <ExactField F>
BlockPermutation weyr_permutation(const CanonicalSpec<F>& spec) {
  BlockPermutation perm{spec.s(), {}};
  for (const auto& level : weyr_levels(spec.segre))
    for (auto g : level) perm.order.push_back(g - 1);
  perm.validate();
  return perm;
}

/// Upper block-bidiagonal Weyr matrix, assembled directly from tau.
template <ExactField F>
Matrix<F> weyr_form(const CanonicalSpec<F>& spec) {
  const auto& segre = spec.segre;
  const std::size_t s = spec.s();
  const auto c = companion(spec.p);
  const auto e = coupling_block(spec.field(), s, spec.kind);
  Matrix<F> w(spec.field(), spec.n(), spec.n());
  for (std::size_t level = 1; level <= segre.levels(); ++level) {
    for (std::size_t chain = 1; chain <= segre.tau[level - 1]; ++chain) {
      const std::size_t at = weyr_position(segre, chain, level) * s;
      w.set_block(at, at, c);
      if (level < segre.levels() && chain <= segre.tau[level])
        w.set_block(at, weyr_position(segre, chain, level + 1) * s, e);
    }
  }
  return w;
}

/// tau_i = (dim ker p^i(W) - dim ker p^(i-1)(W)) / s until the kernels stop growing.
template <ExactField F>
Partition weyr_characteristic(const Matrix<F>& w, const Poly<F>& p) {
  require_square(w, "weyr_characteristic");
  const auto s = std::size_t(p.degree());
  const auto pw = eval_poly_at_matrix(p, w);
  Partition tau;
  auto power = pw;
  std::size_t previous = 0;
  for (std::size_t i = 1; i <= w.rows() + 1; ++i) {
    const std::size_t nullity = w.cols() - rank(power);
    const std::size_t gain = nullity - previous;
    if (gain == 0) break;
    if (gain % s != 0)
      fail(ErrorCode::NotMultipleOfS, "kernel growth " + std::to_string(gain) + " is not a multiple of s=" +
                                          std::to_string(s));
    tau.push_back(gain / s);
    previous = nullity;
    power = power * pw;
  }
  return tau;
}

}  // namespace centra
