#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace softdm {

// Shortest decimal rendering that parses back to the same double.
std::string format_real(double value);

// Parses an unsigned decimal number (digits, optional fraction, optional
// exponent). Signs, hex, inf and nan are rejected; the whole view must be
// consumed.
std::optional<double> parse_unsigned_real(std::string_view text);

}  // namespace softdm
