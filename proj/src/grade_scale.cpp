#include "softdm/grade_scale.hpp"

#include <set>

#include "softdm/error.hpp"

namespace softdm {
namespace {

bool overlaps(const GreyNumber& a, const GreyNumber& b) noexcept {
  return a.lower() <= b.upper() && b.lower() <= a.upper();
}

}  // namespace

bool is_grade_label(std::string_view text) noexcept {
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.empty() || !alpha(text.front())) {
    return false;
  }
  for (char c : text.substr(1)) {
    if (!alpha(c) && !digit(c) && c != '_') {
      return false;
    }
  }
  return true;
}

std::vector<ScaleViolation> validate_scale(std::span<const ScaleEntry> entries) {
  std::vector<ScaleViolation> out;
  if (entries.empty()) {
    out.push_back({ScaleViolationKind::Empty, "scale has no grades"});
    return out;
  }

  std::set<std::string_view> seen;
  for (const auto& entry : entries) {
    if (!is_grade_label(entry.label)) {
      out.push_back({ScaleViolationKind::BadLabel,
                     "label '" + entry.label + "' must match [A-Za-z][A-Za-z0-9_]*"});
    }
    if (!seen.insert(entry.label).second) {
      out.push_back({ScaleViolationKind::DuplicateLabel,
                     "label '" + entry.label + "' appears more than once"});
    }
    if (entry.interval.lower() < 0.0 || entry.interval.upper() > 1.0) {
      out.push_back({ScaleViolationKind::OutsideUnitInterval,
                     "grade " + entry.label + "=" + to_string(entry.interval) +
                         " is not contained in [0;1]"});
    }
  }

  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (overlaps(entries[a].interval, entries[b].interval)) {
        out.push_back({ScaleViolationKind::Overlap,
                       "grades " + entries[a].label + "=" + to_string(entries[a].interval) +
                           " and " + entries[b].label + "=" +
                           to_string(entries[b].interval) + " overlap"});
      }
    }
  }

  for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
    if (!(entries[k].interval.lower() > entries[k + 1].interval.lower())) {
      out.push_back({ScaleViolationKind::Order,
                     "grade " + entries[k + 1].label + " must have a lower bound below that of " +
                         entries[k].label + " (grades are listed best first)"});
    }
  }
  return out;
}

GradeScale::GradeScale(std::vector<ScaleEntry> entries) : entries_(std::move(entries)) {
  auto violations = validate_scale(entries_);
  if (!violations.empty()) {
    std::vector<std::string> messages;
    messages.reserve(violations.size());
    for (auto& v : violations) {
      messages.push_back(std::move(v.message));
    }
    throw ValidationError(std::move(messages));
  }
}

std::optional<GreyNumber> GradeScale::find(std::string_view label) const noexcept {
  for (const auto& entry : entries_) {
    if (entry.label == label) {
      return entry.interval;
    }
  }
  return std::nullopt;
}

GreyNumber GradeScale::interval(std::string_view label) const {
  if (auto found = find(label)) {
    return *found;
  }
  throw UnknownGradeError(std::string(label));
}

GradeScale default_scale() {
  return GradeScale({
      {"A", GreyNumber(0.85, 1.0)},
      {"B", GreyNumber(0.75, 0.84)},
      {"C", GreyNumber(0.6, 0.74)},
      {"D", GreyNumber(0.5, 0.59)},
      {"F", GreyNumber(0.0, 0.49)},
  });
}

}  // namespace softdm
