#pragma once

#include <type_traits>
#include <vector>

#include "centra/poly.hpp"
#include "centra/prime_field.hpp"

namespace centra {

enum class Irreducibility {
  Reducible,
  Irreducible,
  /// Not decided by the library: the caller vouched for it.
  Asserted,
};

namespace detail {

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test: f of degree n is irreducible over GF(q) iff x^(q^n) = x mod f
// and gcd(x^(q^(n/r)) - x, f) = 1 for every prime r | n.
inline bool rabin_irreducible(const Poly<PrimeField>& f) {
  const PrimeField& field = f.field();
  const std::uint64_t q = field.modulus();
  const auto n = std::uint64_t(f.degree());
  const auto x = Poly<PrimeField>::x(field);

  // frobenius[k] = x^(q^k) mod f for k = 0..n
  std::vector<Poly<PrimeField>> frobenius{x % f};
  for (std::uint64_t k = 1; k <= n; ++k) frobenius.push_back(powmod(frobenius.back(), q, f));

  if (!(frobenius[n] == x % f)) return false;
  for (std::uint64_t r : prime_divisors(n)) {
    Poly<PrimeField> g = poly_gcd(frobenius[n / r] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Decides irreducibility of a monic polynomial of positive degree.
///
/// Over GF(p) the answer is exact.  Over Q and GF(p)(t) the library cannot
/// factor, so the caller must pass `assume_irreducible`; a polynomial that
/// shares a proper factor with its nonzero derivative is still rejected.
template <ExactField F>
Irreducibility is_irreducible(const Poly<F>& p, bool assume_irreducible = false) {
  if (p.is_zero() || p.degree() == 0) fail(ErrorCode::DegreeZero, "irreducibility needs degree >= 1");
  if (!p.is_monic()) fail(ErrorCode::NotMonic, format_poly(p));
  if constexpr (std::is_same_v<F, PrimeField>) {
    return detail::rabin_irreducible(p) ? Irreducibility::Irreducible : Irreducibility::Reducible;
  } else {
    if (!assume_irreducible)
      fail(ErrorCode::IrreducibilityUnsupported,
           "cannot decide irreducibility over " + p.field().selector() + "; pass the assume-irreducible flag");
    const Poly<F> dp = poly_derivative(p);
    if (!dp.is_zero() && poly_gcd(p, dp).degree() > 0) return Irreducibility::Reducible;
    return Irreducibility::Asserted;
  }
}

/// gcd(p, p') = 1.
template <ExactField F>
bool is_separable(const Poly<F>& p) {
  return poly_gcd(p, poly_derivative(p)).degree() == 0;
}

}  // namespace centra
