#include "centra/rational_function.hpp"

namespace centra {

namespace {

void check(const RatFunc& a, const RatFunc& b) {
  if (a.modulus() != b.modulus())
    fail(ErrorCode::FieldMismatch,
         "GF(" + std::to_string(a.modulus()) + ")(t) vs GF(" + std::to_string(b.modulus()) + ")(t)");
}

}  // namespace

RatFunc::RatFunc(Base num) : num_(std::move(num)), den_(Base::constant(num_.field(), num_.field().one())) {}

RatFunc::RatFunc(Base num, Base den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  Base::same_field(num, den);
  const PrimeField f = num.field();
  if (num.is_zero()) {
    num_ = Base(f);
    den_ = Base::constant(f, f.one());
    return;
  }
  Base g = poly_gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const auto lc = inverse(den.leading());
  num_ = num.scaled(lc);
  den_ = den.scaled(lc);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  check(a, b);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  check(a, b);
  if (a.is_zero() || b.is_zero()) return RatFunc(RatFunc::Base(a.num_.field()));
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * inverse(b); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -num_;
  return out;
}

RatFunc inverse(const RatFunc& a) {
  if (a.is_zero())
    fail(ErrorCode::DivisionByZero, "inverse of 0 in GF(" + std::to_string(a.modulus()) + ")(t)");
  return RatFunc(a.den_, a.num_);
}

RatFunc RationalFunctionField::random(Rng& rng) const {
  std::vector<GfElement> num;
  for (int i = 0; i < 3; ++i) num.push_back(base_.random(rng));
  RatFunc::Base n(base_, std::move(num));
  if (rng() % 2 == 0) return RatFunc(n);
  RatFunc::Base d(base_, {base_.random(rng), base_.one()});
  return RatFunc(n, d);
}

std::string RationalFunctionField::format(const Element& a) const {
  std::string num = format_poly(a.numerator(), 't');
  if (a.denominator().degree() == 0) return num;
  return "(" + num + ")/(" + format_poly(a.denominator(), 't') + ")";
}

}  // namespace centra
