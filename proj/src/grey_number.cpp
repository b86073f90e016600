#include "softdm/grey_number.hpp"

#include <cmath>

#include "softdm/error.hpp"
#include "softdm/real_text.hpp"

namespace softdm {

GreyNumber::GreyNumber(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw DomainError("grey number bounds must be finite");
  }
  if (lower > upper) {
    throw DomainError("grey number lower bound " + format_real(lower) +
                      " exceeds upper bound " + format_real(upper));
  }
}

GreyNumber operator+(const GreyNumber& a, const GreyNumber& b) {
  return GreyNumber(a.lower() + b.lower(), a.upper() + b.upper());
}

GreyNumber scale(double k, const GreyNumber& a) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError("grey number scalar must be a finite positive real, got " +
                      format_real(k));
  }
  return GreyNumber(k * a.lower(), k * a.upper());
}

double representative_value(const GreyNumber& a) noexcept {
  return (a.lower() + a.upper()) / 2.0;
}

std::string to_string(const GreyNumber& a) {
  return "[" + format_real(a.lower()) + ";" + format_real(a.upper()) + "]";
}

}  // namespace softdm
