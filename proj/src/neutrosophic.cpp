#include "softdm/neutrosophic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "softdm/error.hpp"
#include "softdm/real_text.hpp"

namespace softdm {
namespace {

void require_unit(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw DomainError(std::string("triplet ") + name + " degree " +
                      format_real(value) + " is outside [0,1]");
  }
}

void require_nonnegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(std::string("accumulated ") + name + " degree " +
                      format_real(value) + " must be finite and non-negative");
  }
}

}  // namespace

NeutrosophicTriplet::NeutrosophicTriplet(double truth, double indeterminacy,
                                         double falsity)
    : t_(truth), i_(indeterminacy), f_(falsity) {
  require_unit(truth, "truth");
  require_unit(indeterminacy, "indeterminacy");
  require_unit(falsity, "falsity");
}

TripletAccumulator::TripletAccumulator(double truth, double indeterminacy,
                                       double falsity)
    : t_(truth), i_(indeterminacy), f_(falsity) {
  require_nonnegative(truth, "truth");
  require_nonnegative(indeterminacy, "indeterminacy");
  require_nonnegative(falsity, "falsity");
}

TripletAccumulator operator+(const TripletAccumulator& a,
                             const TripletAccumulator& b) {
  return TripletAccumulator(a.truth() + b.truth(),
                            a.indeterminacy() + b.indeterminacy(),
                            a.falsity() + b.falsity());
}

TripletAccumulator scale(double k, const TripletAccumulator& a) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError("triplet scalar must be a finite positive real, got " +
                      format_real(k));
  }
  return TripletAccumulator(k * a.truth(), k * a.indeterminacy(), k * a.falsity());
}

NeutrosophicTriplet mean(std::span<const WeightedTriplet> items) {
  if (items.empty()) {
    throw DomainError("mean of an empty list of triplets");
  }
  if (std::any_of(items.begin(), items.end(),
                  [](const WeightedTriplet& w) { return w.multiplicity == 0; })) {
    throw DomainError("triplet multiplicity must be at least 1");
  }
  // n*x/n is not always x in floating point; the mean of one repeated value
  // is that value.
  const NeutrosophicTriplet& first = items.front().value;
  if (std::all_of(items.begin(), items.end(),
                  [&](const WeightedTriplet& w) { return w.value == first; })) {
    return first;
  }

  double t = 0.0;
  double i = 0.0;
  double f = 0.0;
  std::size_t n = 0;
  for (const auto& item : items) {
    const auto count = static_cast<double>(item.multiplicity);
    t += count * item.value.truth();
    i += count * item.value.indeterminacy();
    f += count * item.value.falsity();
    n += item.multiplicity;
  }
  const auto total = static_cast<double>(n);
  // A convex combination stays in the box; the constructor rejects anything
  // that does not, so rounding defects surface instead of being clamped.
  return NeutrosophicTriplet(t / total, i / total, f / total);
}

NeutrosophicTriplet mean(std::span<const NeutrosophicTriplet> items) {
  std::vector<WeightedTriplet> weighted;
  weighted.reserve(items.size());
  for (const auto& x : items) {
    weighted.push_back({x, 1});
  }
  return mean(std::span<const WeightedTriplet>(weighted));
}

Information classify_information(const NeutrosophicTriplet& x, double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw DomainError("classification epsilon must be a finite positive real");
  }
  const double s = x.sum();
  if (std::abs(s - 1.0) <= epsilon) {
    return Information::Complete;
  }
  return s < 1.0 ? Information::Incomplete : Information::Inconsistent;
}

std::string_view to_string(Information kind) noexcept {
  switch (kind) {
    case Information::Incomplete:
      return "incomplete";
    case Information::Complete:
      return "complete";
    case Information::Inconsistent:
      return "inconsistent";
  }
  return "unknown";
}

std::string to_string(const NeutrosophicTriplet& x) {
  return "(" + format_real(x.truth()) + ";" + format_real(x.indeterminacy()) + ";" +
         format_real(x.falsity()) + ")";
}

}  // namespace softdm
