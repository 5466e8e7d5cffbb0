#include "centra/rational.hpp"

namespace centra {

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

}  // namespace centra
