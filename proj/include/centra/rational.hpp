#pragma once

#include <gmpxx.h>

#include <string>

#include "centra/error.hpp"
#include "centra/field.hpp"

namespace centra {

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator (GMP canonicalizes after every operation).
class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(long num, long den);

  const mpq_class& value() const noexcept { return q_; }
  bool is_zero() const noexcept { return sgn(q_) == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by 0 in Q");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  friend Rational inverse(const Rational& a) {
    if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0 in Q");
    return Rational(mpq_class(1 / a.q_));
  }

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_{0};
};

/// The rational numbers.
class RationalField {
 public:
  using Element = Rational;

  std::uint32_t characteristic() const noexcept { return 0; }
  Element zero() const { return Rational(0, 1); }
  Element one() const { return Rational(1, 1); }
  Element from_int(std::int64_t k) const { return Rational(long(k), 1); }
  /// Small numerators and denominators; enough to exercise fraction growth.
  Element random(Rng& rng) const {
    long num = long(rng() % 19) - 9;
    long den = long(rng() % 5) + 1;
    return Rational(num, den);
  }

  std::string selector() const { return "q"; }
  std::string format(const Element& a) const { return a.str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

static_assert(ExactField<RationalField>);

}  // namespace centra
