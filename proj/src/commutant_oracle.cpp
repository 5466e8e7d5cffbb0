#include "centra/commutant_oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace centra {

std::size_t oracle_max_n_from_env() {
  const char* raw = std::getenv("CENTRA_MAX_N");
  if (raw == nullptr) return kDefaultOracleMaxN;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefaultOracleMaxN;
  return value;
}

}  // namespace centra
