#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softdm/grey_number.hpp"

namespace softdm {

struct ScaleEntry {
  std::string label;
  GreyNumber interval;

  friend bool operator==(const ScaleEntry&, const ScaleEntry&) = default;
};

enum class ScaleViolationKind {
  Empty,
  BadLabel,
  DuplicateLabel,
  OutsideUnitInterval,
  Overlap,
  Order,
};

struct ScaleViolation {
  ScaleViolationKind kind;
  std::string message;
};

// Every broken invariant of a candidate scale, in discovery order. An empty
// result means the entries form a valid GradeScale.
//
// Invariants: at least one entry; labels match [A-Za-z][A-Za-z0-9_]* and are
// unique (case-sensitive); every interval lies in [0,1]; intervals are
// pairwise disjoint (closed, so shared endpoints overlap); lower endpoints
// strictly decrease down the list. Gaps between intervals are fine.
std::vector<ScaleViolation> validate_scale(std::span<const ScaleEntry> entries);

// Ordered mapping from qualitative grade labels to grey numbers.
class GradeScale {
 public:
  // Throws ValidationError listing every violation.
  explicit GradeScale(std::vector<ScaleEntry> entries);

  const std::vector<ScaleEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<GreyNumber> find(std::string_view label) const noexcept;

  // Throws UnknownGradeError naming the label.
  GreyNumber interval(std::string_view label) const;

  friend bool operator==(const GradeScale&, const GradeScale&) = default;

 private:
  std::vector<ScaleEntry> entries_;
};

// A=[0.85,1] B=[0.75,0.84] C=[0.6,0.74] D=[0.5,0.59] F=[0,0.49]
GradeScale default_scale();

bool is_grade_label(std::string_view text) noexcept;

}  // namespace softdm
