#include "centra/prime_field.hpp"

namespace centra {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) fail(ErrorCode::ParseError, "GF(p) needs a prime modulus, got " + std::to_string(p));
}

}  // namespace centra
