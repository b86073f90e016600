#pragma once

#include <string>

namespace softdm {

// A real number known only to lie in the closed interval [lower, upper].
// Degenerate intervals stand for crisp numbers.
class GreyNumber {
 public:
  constexpr GreyNumber() noexcept = default;

  // Throws DomainError if either bound is non-finite or lower > upper.
  GreyNumber(double lower, double upper);

  static GreyNumber crisp(double value) { return GreyNumber(value, value); }

  constexpr double lower() const noexcept { return lower_; }
  constexpr double upper() const noexcept { return upper_; }
  constexpr double width() const noexcept { return upper_ - lower_; }

  constexpr bool contains(double x) const noexcept {
    return lower_ <= x && x <= upper_;
  }

  friend constexpr bool operator==(const GreyNumber&,
                                   const GreyNumber&) noexcept = default;

 private:
  double lower_ = 0.0;
  double upper_ = 0.0;
};

// Interval sum [a.lower + b.lower, a.upper + b.upper].
GreyNumber operator+(const GreyNumber& a, const GreyNumber& b);

// [k * lower, k * upper]; k must be a finite positive real.
GreyNumber scale(double k, const GreyNumber& a);

// Midpoint of the interval, used as the crisp stand-in for the grey number.
double representative_value(const GreyNumber& a) noexcept;

// "[lower;upper]"
std::string to_string(const GreyNumber& a);

}  // namespace softdm
