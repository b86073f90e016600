#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "softdm/grade_scale.hpp"
#include "softdm/grey_number.hpp"
#include "softdm/neutrosophic.hpp"

namespace softdm {

struct BinaryCell {
  bool value = false;
  friend bool operator==(const BinaryCell&, const BinaryCell&) = default;
};

struct GradeCell {
  std::string label;
  friend bool operator==(const GradeCell&, const GradeCell&) = default;
};

using Cell = std::variant<BinaryCell, GradeCell, GreyNumber, NeutrosophicTriplet>;

// "binary", "grade", "grey number" or "neutrosophic triplet".
std::string_view cell_kind(const Cell& cell) noexcept;

// Candidates x parameters matrix of cells.
class DecisionTable {
 public:
  // `cells` is row-major. Throws DomainError when there is no candidate or
  // no parameter, identifiers are empty or repeated, or the cell count does
  // not match.
  DecisionTable(std::vector<std::string> candidates,
                std::vector<std::string> parameters, std::vector<Cell> cells);

  const std::vector<std::string>& candidates() const noexcept {
    return candidates_;
  }
  const std::vector<std::string>& parameters() const noexcept {
    return parameters_;
  }
  std::size_t rows() const noexcept { return candidates_.size(); }
  std::size_t cols() const noexcept { return parameters_.size(); }

  const Cell& at(std::size_t row, std::size_t col) const;
  std::span<const Cell> row(std::size_t row) const;
  std::span<const Cell> cells() const noexcept { return cells_; }

  friend bool operator==(const DecisionTable&, const DecisionTable&) = default;

 private:
  std::vector<std::string> candidates_;
  std::vector<std::string> parameters_;
  std::vector<Cell> cells_;
};

template <class T>
struct Scored {
  std::string candidate;
  T score;
  friend bool operator==(const Scored&, const Scored&) = default;
};

// Scores are listed in table candidate order.
using BinaryScores = std::vector<Scored<std::size_t>>;
using GreyScores = std::vector<Scored<double>>;
using TripletScores = std::vector<Scored<NeutrosophicTriplet>>;

// Row sums. Every cell must be binary.
BinaryScores choice_values_binary(const DecisionTable& table);

// Per row: integer sum of the binary cells plus the representative value of
// the interval sum of the grey cells, grade cells first mapped through
// `scale`. Neutrosophic cells are rejected; unknown grades throw
// UnknownGradeError.
GreyScores choice_values_grey(const DecisionTable& table, const GradeScale& scale);

// Per row: mean triplet after embedding binary 0 as (0,0,1) and 1 as (1,0,0).
// Grade and grey cells are rejected since there is no sound conversion from
// them to triplets.
TripletScores choice_values_neutrosophic(const DecisionTable& table);

// Candidates with the greatest truth degree (within epsilon).
std::vector<std::string> rank_optimistic(std::span<const Scored<NeutrosophicTriplet>> scores,
                                         double epsilon = kDefaultEpsilon);

// Candidates with the lowest falsity degree (within epsilon).
std::vector<std::string> rank_conservative(std::span<const Scored<NeutrosophicTriplet>> scores,
                                           double epsilon = kDefaultEpsilon);

struct CombinedRanking {
  std::vector<std::string> winners;
  bool used_fallback = false;
};

// Intersection of the optimistic and conservative winners. When that is
// empty: candidates maximizing t - f, narrowed to those with the lowest i.
CombinedRanking combined_ranking(std::span<const Scored<NeutrosophicTriplet>> scores,
                                 double epsilon = kDefaultEpsilon);

std::vector<std::string> rank_combined(std::span<const Scored<NeutrosophicTriplet>> scores,
                                       double epsilon = kDefaultEpsilon);

enum class Method { Binary, Grey, Neutrosophic };
enum class Criterion { Optimistic, Conservative, Combined };

std::string_view to_string(Method method) noexcept;
std::string_view to_string(Criterion criterion) noexcept;
std::optional<Method> parse_method(std::string_view text) noexcept;
std::optional<Criterion> parse_criterion(std::string_view text) noexcept;

struct DecideOptions {
  // Grey only; the default scale is used when unset.
  std::optional<GradeScale> scale;
  // Neutrosophic only; Combined when unset.
  std::optional<Criterion> criterion;
  double epsilon = kDefaultEpsilon;
};

enum class RiskRelation { Higher, Lower, Equal };

struct RiskComparison {
  std::string other;
  double other_indeterminacy = 0.0;
  RiskRelation relation = RiskRelation::Equal;
};

// Indeterminacy of a winner read as decision risk, compared with every other
// contender (the union of the optimistic and conservative winners).
struct RiskNote {
  std::string candidate;
  double indeterminacy = 0.0;
  std::vector<RiskComparison> comparisons;
  std::string text;
};

using Score = std::variant<std::size_t, double, NeutrosophicTriplet>;

struct DecisionReport {
  Method method = Method::Binary;
  double epsilon = kDefaultEpsilon;
  std::vector<Scored<Score>> scores;
  // Best first; ties keep table order.
  std::vector<std::string> winners;
  std::optional<Criterion> criterion;
  std::vector<RiskNote> risk_notes;
  // Caveats about how the outcome was reached.
  std::vector<std::string> flags;
};

// Runs one method and packages scores, winners and (neutrosophic only) risk
// notes. Throws InvalidOptionsError when a scale is given for a non-grey
// method, a criterion for a non-neutrosophic one, or epsilon is not a finite
// positive number.
DecisionReport decide(const DecisionTable& table, Method method,
                      const DecideOptions& options = {});

}  // namespace softdm
