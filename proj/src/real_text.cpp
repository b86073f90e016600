#include "softdm/real_text.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace softdm {

std::string format_real(double value) {
  std::array<char, 32> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) {
    throw std::system_error(std::make_error_code(ec), "format_real");
  }
  return std::string(buffer.data(), end);
}

std::optional<double> parse_unsigned_real(std::string_view text) {
  if (text.empty() || text.front() < '0' || text.front() > '9') {
    return std::nullopt;
  }
  for (char c : text) {
    bool allowed = (c >= '0' && c <= '9') || c == '.' || c == 'e' || c == 'E' ||
                   c == '+' || c == '-';
    if (!allowed) {
      return std::nullopt;
    }
  }
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last) {
    return std::nullopt;
  }
  return value;
}

}  // namespace softdm
