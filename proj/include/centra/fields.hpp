#pragma once

#include <string_view>
#include <variant>

#include "centra/prime_field.hpp"
#include "centra/rational.hpp"
#include "centra/rational_function.hpp"

namespace centra {

/// One of the supported fields, chosen at run time.
using AnyField = std::variant<PrimeField, RationalField, RationalFunctionField>;

/// Parses `gf:<p>`, `q` or `gft:<p>`.
AnyField parse_field_selector(std::string_view text);

std::string selector_of(const AnyField& field);

}  // namespace centra
