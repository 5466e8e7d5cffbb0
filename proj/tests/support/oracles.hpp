#pragma once

// Brute-force reference computations used only by the tests.  None of these
// call into the elimination, permutation or centralizer code they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "centra/canonical_forms.hpp"
#include "centra/matrix.hpp"
#include "centra/poly.hpp"
#include "centra/prime_field.hpp"

namespace oracle {

using centra::ElementOf;
using centra::ExactField;
using centra::Matrix;
using centra::Poly;
using centra::PrimeField;

/// Leibniz expansion over all permutations; fine up to n = 8.
template <ExactField F>
ElementOf<F> leibniz_det(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto total = m.field().zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto term = m.field().one();
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Coefficient vectors (ascending, leading 1) of every monic polynomial of degree d over GF(p).
inline std::vector<std::vector<std::uint32_t>> monic_coefficients(std::uint32_t p, std::size_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> c(d + 1, 0);
  c[d] = 1;
  for (;;) {
    out.push_back(c);
    std::size_t i = 0;
    while (i < d && ++c[i] == p) c[i++] = 0;
    if (i == d) break;
  }
  return out;
}

inline std::vector<std::uint32_t> multiply_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                               std::uint32_t p) {
  std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = std::uint32_t((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return out;
}

/// Monic irreducibles of degree d over GF(p): everything that is not a product
/// of two monic factors of positive degree.
inline std::vector<std::vector<std::uint32_t>> irreducible_coefficients(std::uint32_t p, std::size_t d) {
  std::set<std::vector<std::uint32_t>> reducible;
  for (std::size_t a = 1; a <= d / 2; ++a)
    for (const auto& f : monic_coefficients(p, a))
      for (const auto& g : monic_coefficients(p, d - a)) reducible.insert(multiply_mod(f, g, p));
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& c : monic_coefficients(p, d))
    if (!reducible.count(c)) out.push_back(c);
  return out;
}

inline Poly<PrimeField> to_poly(const PrimeField& f, const std::vector<std::uint32_t>& c) {
  std::vector<ElementOf<PrimeField>> coeffs;
  for (auto v : c) coeffs.push_back(f.from_int(v));
  return Poly<PrimeField>(f, coeffs);
}

inline std::vector<Poly<PrimeField>> irreducibles(const PrimeField& f, std::size_t d) {
  std::vector<Poly<PrimeField>> out;
  for (const auto& c : irreducible_coefficients(f.modulus(), d)) out.push_back(to_poly(f, c));
  return out;
}

inline std::vector<Poly<PrimeField>> monic_polys(const PrimeField& f, std::size_t d) {
  std::vector<Poly<PrimeField>> out;
  for (const auto& c : monic_coefficients(f.modulus(), d)) out.push_back(to_poly(f, c));
  return out;
}

/// True iff p has a root in GF(p), by evaluating at every element.
inline bool has_root(const Poly<PrimeField>& poly) {
  const auto& f = poly.field();
  for (std::uint32_t v = 0; v < f.modulus(); ++v) {
    auto acc = f.zero();
    const auto x = f.from_int(v);
    for (std::size_t k = poly.coefficients().size(); k-- > 0;) acc = acc * x + poly.coefficients()[k];
    if (acc.is_zero()) return true;
  }
  return false;
}

/// Number of X over GF(p) with AX = XA, by enumerating every matrix.
inline std::size_t commutant_count_exhaustive(const Matrix<PrimeField>& a) {
  const auto& f = a.field();
  const std::size_t n = a.rows();
  const std::size_t cells = n * n;
  std::vector<std::uint32_t> digits(cells, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      for (std::size_t c = 0; c < n && ok; ++c) {
        std::uint64_t lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < n; ++k) {
          lhs += std::uint64_t(a(r, k).value()) * digits[k * n + c];
          rhs += std::uint64_t(digits[r * n + k]) * a(k, c).value();
        }
        ok = lhs % f.modulus() == rhs % f.modulus();
      }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < cells && ++digits[i] == f.modulus()) digits[i++] = 0;
    if (i == cells) break;
  }
  return count;
}

/// Explicit permutation matrix whose t-th group of s columns is identity group order[t] (0-based).
template <ExactField F>
Matrix<F> explicit_permutation(const F& field, std::size_t s, const std::vector<std::size_t>& order) {
  const std::size_t n = s * order.size();
  Matrix<F> p(field, n, n);
  for (std::size_t t = 0; t < order.size(); ++t)
    for (std::size_t k = 0; k < s; ++k) p(order[t] * s + k, t * s + k) = field.one();
  return p;
}

/// Naive triple-loop product.
template <ExactField F>
Matrix<F> naive_product(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto acc = a.field().zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

template <ExactField F>
Matrix<F> random_matrix(const F& field, std::size_t rows, std::size_t cols, centra::Rng& rng) {
  Matrix<F> m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.random(rng);
  return m;
}

/// Classical lower Jordan matrix: lambda on the diagonal, ones on the
/// subdiagonal inside each block.
template <ExactField F>
Matrix<F> classical_lower_jordan(const F& field, const ElementOf<F>& lambda, const std::vector<std::size_t>& alpha) {
  std::size_t n = 0;
  for (auto a : alpha) n += a;
  Matrix<F> j(field, n, n);
  std::size_t at = 0;
  for (auto a : alpha) {
    for (std::size_t k = 0; k < a; ++k) {
      j(at + k, at + k) = lambda;
      if (k + 1 < a) j(at + k + 1, at + k) = field.one();
    }
    at += a;
  }
  return j;
}

/// Classical upper Weyr matrix with diagonal blocks lambda*I_{tau_l} and
/// superdiagonal blocks [I; 0] of size tau_l x tau_{l+1}.
template <ExactField F>
Matrix<F> classical_upper_weyr(const F& field, const ElementOf<F>& lambda, const std::vector<std::size_t>& tau) {
  std::size_t n = 0;
  for (auto t : tau) n += t;
  Matrix<F> w(field, n, n);
  std::size_t at = 0;
  for (std::size_t l = 0; l < tau.size(); ++l) {
    for (std::size_t k = 0; k < tau[l]; ++k) w(at + k, at + k) = lambda;
    if (l + 1 < tau.size())
      for (std::size_t k = 0; k < tau[l + 1]; ++k) w(at + k, at + tau[l] + k) = field.one();
    at += tau[l];
  }
  return w;
}

/// tau_j = #{i : alpha_i >= j}, counted directly.
inline std::vector<std::size_t> conjugate_by_counting(const std::vector<std::size_t>& alpha) {
  std::vector<std::size_t> tau;
  for (std::size_t j = 1;; ++j) {
    std::size_t count = 0;
    for (auto a : alpha)
      if (a >= j) ++count;
    if (count == 0) break;
    tau.push_back(count);
  }
  return tau;
}

/// Uniform-ish random partition of r by random cuts, sorted descending.
inline std::vector<std::size_t> random_partition(std::size_t r, centra::Rng& rng) {
  std::vector<std::size_t> parts;
  std::size_t left = r;
  while (left > 0) {
    const std::size_t part = 1 + rng() % left;
    parts.push_back(part);
    left -= part;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace oracle
