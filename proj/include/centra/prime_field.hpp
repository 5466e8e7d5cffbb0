#pragma once

#include <cstdint>
#include <string>

#include "centra/error.hpp"
#include "centra/field.hpp"

namespace centra {

/// Residue modulo a machine-word prime.  The modulus travels with the value so
/// mixing elements of different prime fields is caught at the operation.
class GfElement {
 public:
  GfElement() = default;
  GfElement(std::uint32_t value, std::uint32_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend GfElement operator+(GfElement a, GfElement b) {
    check(a, b);
    std::uint64_t s = std::uint64_t(a.value_) + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(std::uint32_t(s), a.modulus_);
  }
  friend GfElement operator-(GfElement a, GfElement b) {
    check(a, b);
    std::uint64_t s = std::uint64_t(a.value_) + a.modulus_ - b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(std::uint32_t(s), a.modulus_);
  }
  friend GfElement operator*(GfElement a, GfElement b) {
    check(a, b);
    return raw(std::uint32_t(std::uint64_t(a.value_) * b.value_ % a.modulus_), a.modulus_);
  }
  friend GfElement operator/(GfElement a, GfElement b) { return a * inverse(b); }
  GfElement operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  GfElement& operator+=(GfElement b) { return *this = *this + b; }
  GfElement& operator-=(GfElement b) { return *this = *this - b; }
  GfElement& operator*=(GfElement b) { return *this = *this * b; }

  friend bool operator==(GfElement a, GfElement b) {
    check(a, b);
    return a.value_ == b.value_;
  }

  friend GfElement inverse(GfElement a) {
    if (a.value_ == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in GF(" + std::to_string(a.modulus_) + ")");
    // extended Euclid on (value, modulus)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = a.modulus_, new_r = a.value_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += a.modulus_;
    return raw(std::uint32_t(t), a.modulus_);
  }

 private:
  static GfElement raw(std::uint32_t v, std::uint32_t m) {
    GfElement e;
    e.value_ = v;
    e.modulus_ = m;
    return e;
  }
  static void check(GfElement a, GfElement b) {
    if (a.modulus_ != b.modulus_)
      fail(ErrorCode::FieldMismatch,
           "GF(" + std::to_string(a.modulus_) + ") vs GF(" + std::to_string(b.modulus_) + ")");
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

bool is_prime(std::uint64_t n) noexcept;

/// GF(p) for a prime p < 2^32.
class PrimeField {
 public:
  using Element = GfElement;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Element zero() const { return Element(0, p_); }
  Element one() const { return Element(1, p_); }
  Element from_int(std::int64_t k) const {
    std::int64_t r = k % std::int64_t(p_);
    if (r < 0) r += p_;
    return Element(std::uint32_t(r), p_);
  }
  Element random(Rng& rng) const { return Element(std::uint32_t(rng() % p_), p_); }

  std::string selector() const { return "gf:" + std::to_string(p_); }
  std::string format(const Element& a) const { return std::to_string(a.value()); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

static_assert(ExactField<PrimeField>);

}  // namespace centra
