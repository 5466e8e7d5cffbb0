#include "centra/fields.hpp"

#include <charconv>
#include <string>

namespace centra {

namespace {

std::uint32_t parse_modulus(std::string_view digits, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || value >= (1ull << 32))
    fail(ErrorCode::ParseError, "bad field selector '" + std::string(whole) + "'");
  return std::uint32_t(value);
}

}  // namespace

AnyField parse_field_selector(std::string_view text) {
  if (text == "q" || text == "Q") return RationalField{};
  if (text.starts_with("gft:")) return RationalFunctionField(parse_modulus(text.substr(4), text));
  if (text.starts_with("gf:")) return PrimeField(parse_modulus(text.substr(3), text));
  fail(ErrorCode::ParseError, "unknown field selector '" + std::string(text) + "' (expected gf:<p>, q or gft:<p>)");
}

std::string selector_of(const AnyField& field) {
  return std::visit([](const auto& f) { return std::string(f.selector()); }, field);
}

}  // namespace centra
