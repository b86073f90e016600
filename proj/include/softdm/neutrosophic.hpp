#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace softdm {

inline constexpr double kDefaultEpsilon = 1e-9;

// Truth, indeterminacy and falsity degrees of one element, each in [0,1].
class NeutrosophicTriplet {
 public:
  constexpr NeutrosophicTriplet() noexcept = default;

  // Throws DomainError unless every component is a finite value in [0,1].
  NeutrosophicTriplet(double truth, double indeterminacy, double falsity);

  constexpr double truth() const noexcept { return t_; }
  constexpr double indeterminacy() const noexcept { return i_; }
  constexpr double falsity() const noexcept { return f_; }
  constexpr double sum() const noexcept { return t_ + i_ + f_; }

  friend constexpr bool operator==(const NeutrosophicTriplet&,
                                   const NeutrosophicTriplet&) noexcept = default;

 private:
  double t_ = 0.0;
  double i_ = 0.0;
  double f_ = 0.0;
};

// Unbounded non-negative triplet. Sums and scalings of triplets may leave
// the unit box, so intermediate results live here.
class TripletAccumulator {
 public:
  constexpr TripletAccumulator() noexcept = default;

  // Throws DomainError unless every component is finite and non-negative.
  TripletAccumulator(double truth, double indeterminacy, double falsity);

  constexpr TripletAccumulator(const NeutrosophicTriplet& x) noexcept  // NOLINT
      : t_(x.truth()), i_(x.indeterminacy()), f_(x.falsity()) {}

  constexpr double truth() const noexcept { return t_; }
  constexpr double indeterminacy() const noexcept { return i_; }
  constexpr double falsity() const noexcept { return f_; }

  friend constexpr bool operator==(const TripletAccumulator&,
                                   const TripletAccumulator&) noexcept = default;

 private:
  double t_ = 0.0;
  double i_ = 0.0;
  double f_ = 0.0;
};

TripletAccumulator operator+(const TripletAccumulator& a,
                             const TripletAccumulator& b);

// Componentwise k * a; k must be a finite positive real.
TripletAccumulator scale(double k, const TripletAccumulator& a);

struct WeightedTriplet {
  NeutrosophicTriplet value;
  std::size_t multiplicity = 1;
};

// Mean of the listed triplets, each counted `multiplicity` times:
// (1/n) * sum(n_k * x_k) with n = sum(n_k). The division happens once, after
// the whole sum is accumulated in list order. Throws DomainError on an empty
// list or a zero multiplicity.
NeutrosophicTriplet mean(std::span<const WeightedTriplet> items);
NeutrosophicTriplet mean(std::span<const NeutrosophicTriplet> items);

enum class Information { Incomplete, Complete, Inconsistent };

// Complete when |t+i+f - 1| <= epsilon, Incomplete below that band,
// Inconsistent above it.
Information classify_information(const NeutrosophicTriplet& x,
                                 double epsilon = kDefaultEpsilon);

std::string_view to_string(Information kind) noexcept;

// "(t;i;f)"
std::string to_string(const NeutrosophicTriplet& x);

}  // namespace softdm
