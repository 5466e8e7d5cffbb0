#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "centra/error.hpp"
#include "centra/field.hpp"

namespace centra {

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr long kZeroDegree = std::numeric_limits<long>::min();

/// Dense univariate polynomial, coefficients in ascending order with no
/// trailing zeros.  The zero polynomial has no coefficients.
template <ExactField F>
class Poly {
 public:
  using Element = ElementOf<F>;

  Poly() = default;
  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& field, Element c) { return Poly(field, {std::move(c)}); }
  static Poly monomial(const F& field, Element c, std::size_t exponent) {
    std::vector<Element> cs(exponent + 1, field.zero());
    cs[exponent] = std::move(c);
    return Poly(field, std::move(cs));
  }
  static Poly x(const F& field) { return monomial(field, field.one(), 1); }

  const F& field() const noexcept { return field_; }
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return coeffs_.empty() ? kZeroDegree : long(coeffs_.size()) - 1; }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  Element leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

  Poly monic() const {
    if (is_zero()) return *this;
    Element inv = inverse(leading());
    return scaled(inv);
  }

  Poly scaled(const Element& c) const {
    std::vector<Element> cs;
    cs.reserve(coeffs_.size());
    for (const auto& a : coeffs_) cs.push_back(a * c);
    return Poly(field_, std::move(cs));
  }

  Element eval(const Element& at) const {
    Element acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    same_field(a, b);
    std::vector<Element> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] = cs[i] + b.coeffs_[i];
    return Poly(a.field_, std::move(cs));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const { return scaled(-field_.one()); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Element> cs(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(cs));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  static void same_field(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_))
      fail(ErrorCode::FieldMismatch, a.field_.selector() + " vs " + b.field_.selector());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  F field_{};
  std::vector<Element> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <ExactField F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  Poly<F>::same_field(a, b);
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const F& f = a.field();
  if (a.degree() < b.degree()) return {Poly<F>(f), a};
  std::vector<ElementOf<F>> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<ElementOf<F>> quo(rem.size() - db, f.zero());
  const auto lead_inv = inverse(bc.back());
  for (std::size_t k = quo.size(); k-- > 0;) {
    auto c = rem[k + db] * lead_inv;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - c * bc[j];
  }
  rem.resize(db);
  return {Poly<F>(f, std::move(quo)), Poly<F>(f, std::move(rem))};
}

template <ExactField F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

/// Monic greatest common divisor.
template <ExactField F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  Poly<F>::same_field(a, b);
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <ExactField F>
Poly<F> poly_derivative(const Poly<F>& p) {
  const F& f = p.field();
  const auto& cs = p.coefficients();
  if (cs.size() <= 1) return Poly<F>(f);
  std::vector<ElementOf<F>> out;
  out.reserve(cs.size() - 1);
  for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i] * f.from_int(std::int64_t(i)));
  return Poly<F>(f, std::move(out));
}

/// base^exponent mod modulus by square-and-multiply.
template <ExactField F>
Poly<F> powmod(Poly<F> base, std::uint64_t exponent, const Poly<F>& modulus) {
  Poly<F> result = Poly<F>::constant(base.field(), base.field().one()) % modulus;
  base = base % modulus;
  while (exponent > 0) {
    if (exponent & 1u) result = (result * base) % modulus;
    exponent >>= 1;
    if (exponent > 0) base = (base * base) % modulus;
  }
  return result;
}

template <ExactField F>
Poly<F> pow(const Poly<F>& base, std::size_t exponent) {
  Poly<F> result = Poly<F>::constant(base.field(), base.field().one());
  for (std::size_t i = 0; i < exponent; ++i) result = result * base;
  return result;
}

namespace detail {

inline bool has_top_level_sum(const std::string& text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-')) return true;
  }
  return false;
}

}  // namespace detail

/// Renders `p` in the text syntax accepted by the parser, e.g. `x^3+2*x+1`.
template <ExactField F>
std::string format_poly(const Poly<F>& p, char var = 'x') {
  if (p.is_zero()) return "0";
  const F& f = p.field();
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t e = cs.size(); e-- > 0;) {
    const auto& c = cs[e];
    if (c.is_zero()) continue;
    std::string coeff = f.format(c);
    if (detail::has_top_level_sum(coeff)) coeff = "(" + coeff + ")";
    std::string mono;
    if (e >= 1) mono = std::string(1, var) + (e > 1 ? "^" + std::to_string(e) : "");
    std::string term;
    if (e == 0) {
      term = coeff;
    } else if (c == f.one()) {
      term = mono;
    } else if (coeff == "-1") {
      term = "-" + mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace centra
