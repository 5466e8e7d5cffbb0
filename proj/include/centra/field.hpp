#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

namespace centra {

using Rng = std::mt19937_64;

/// An exact field together with its element type.
///
/// A field object is a small value (a modulus, or nothing) that knows how to
/// manufacture constants and print elements.  Elements carry enough state to
/// do arithmetic on their own, so generic code writes `a * b + c` directly.
template <class F>
concept ExactField = std::regular<F> && requires(const F& f, const typename F::Element& a,
                                                 std::int64_t k, Rng& rng) {
  typename F::Element;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(k) } -> std::same_as<typename F::Element>;
  { f.random(rng) } -> std::same_as<typename F::Element>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.selector() } -> std::convertible_to<std::string>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a / a } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
  { a == a } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { inverse(a) } -> std::same_as<typename F::Element>;
};

template <ExactField F>
using ElementOf = typename F::Element;

}  // namespace centra
