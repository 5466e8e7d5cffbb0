#pragma once

#include <string>

#include "centra/poly.hpp"
#include "centra/prime_field.hpp"

namespace centra {

/// Element of GF(p)(t): numerator/denominator coprime, denominator monic.
class RatFunc {
 public:
  using Base = Poly<PrimeField>;

  RatFunc() = default;
  RatFunc(Base num, Base den);
  explicit RatFunc(Base num);

  const Base& numerator() const noexcept { return num_; }
  const Base& denominator() const noexcept { return den_; }
  std::uint32_t modulus() const noexcept { return num_.field().modulus(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend RatFunc inverse(const RatFunc& a);

 private:
  Base num_{PrimeField(2)};
  Base den_{Base::constant(PrimeField(2), PrimeField(2).one())};
};

/// The rational function field GF(p)(t), an imperfect field for every p.
class RationalFunctionField {
 public:
  using Element = RatFunc;

  RationalFunctionField() = default;
  explicit RationalFunctionField(std::uint32_t p) : base_(p) {}

  const PrimeField& base() const noexcept { return base_; }
  std::uint32_t characteristic() const noexcept { return base_.modulus(); }

  Element zero() const { return RatFunc(RatFunc::Base(base_)); }
  Element one() const { return RatFunc(RatFunc::Base::constant(base_, base_.one())); }
  Element from_int(std::int64_t k) const { return RatFunc(RatFunc::Base::constant(base_, base_.from_int(k))); }
  /// The transcendental t.
  Element t() const { return RatFunc(RatFunc::Base::x(base_)); }
  Element random(Rng& rng) const;

  std::string selector() const { return "gft:" + std::to_string(base_.modulus()); }
  std::string format(const Element& a) const;

  friend bool operator==(const RationalFunctionField&, const RationalFunctionField&) = default;

 private:
  PrimeField base_{2};
};

static_assert(ExactField<RationalFunctionField>);

}  // namespace centra
