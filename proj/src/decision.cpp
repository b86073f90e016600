#include "softdm/decision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "softdm/error.hpp"

namespace softdm {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_unique_ids(const std::vector<std::string>& ids, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (id.empty()) {
      throw DomainError(std::string("empty ") + what + " identifier");
    }
    if (!seen.insert(id).second) {
      throw DomainError(std::string("duplicate ") + what + " identifier '" + id + "'");
    }
  }
}

[[noreturn]] void mismatch(const DecisionTable& table, std::size_t row, std::size_t col,
                           std::string_view method, std::string_view accepted,
                           std::string_view hint = {}) {
  const auto& candidate = table.candidates()[row];
  const auto& parameter = table.parameters()[col];
  std::string message = "cell (" + candidate + ", " + parameter + ") holds a " +
                        std::string(cell_kind(table.at(row, col))) + " but the " +
                        std::string(method) + " method accepts only " +
                        std::string(accepted) + " cells";
  if (!hint.empty()) {
    message += "; ";
    message += hint;
  }
  throw CellMismatchError(std::move(message), row, col, candidate, parameter);
}

void require_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw DomainError("tie tolerance must be a finite positive real");
  }
}

// Indices whose key is within epsilon of the best key, ordered best key
// first and then by table position.
template <class Key>
std::vector<std::size_t> best_within(std::span<const std::size_t> pool, Key key,
                                     bool maximize, double epsilon) {
  if (pool.empty()) {
    return {};
  }
  double best = key(pool.front());
  for (auto idx : pool) {
    best = maximize ? std::max(best, key(idx)) : std::min(best, key(idx));
  }
  std::vector<std::size_t> out;
  for (auto idx : pool) {
    if (std::abs(key(idx) - best) <= epsilon) {
      out.push_back(idx);
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return maximize ? key(a) > key(b) : key(a) < key(b);
  });
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

using TripletSpan = std::span<const Scored<NeutrosophicTriplet>>;

std::vector<std::size_t> optimistic_indices(TripletSpan scores, double epsilon) {
  auto pool = all_indices(scores.size());
  return best_within(
      pool, [&](std::size_t k) { return scores[k].score.truth(); }, true, epsilon);
}

std::vector<std::size_t> conservative_indices(TripletSpan scores, double epsilon) {
  auto pool = all_indices(scores.size());
  return best_within(
      pool, [&](std::size_t k) { return scores[k].score.falsity(); }, false, epsilon);
}

struct CombinedIndices {
  std::vector<std::size_t> winners;
  bool used_fallback = false;
};

CombinedIndices combined_indices(TripletSpan scores, double epsilon) {
  auto optimistic = optimistic_indices(scores, epsilon);
  auto conservative = conservative_indices(scores, epsilon);
  std::vector<std::size_t> both;
  for (auto k : optimistic) {
    if (std::find(conservative.begin(), conservative.end(), k) != conservative.end()) {
      both.push_back(k);
    }
  }
  if (!both.empty()) {
    std::stable_sort(both.begin(), both.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = scores[a].score;
      const auto& y = scores[b].score;
      if (x.truth() != y.truth()) {
        return x.truth() > y.truth();
      }
      if (x.falsity() != y.falsity()) {
        return x.falsity() < y.falsity();
      }
      return a < b;
    });
    return {std::move(both), false};
  }

  auto pool = all_indices(scores.size());
  auto margin = best_within(
      pool,
      [&](std::size_t k) { return scores[k].score.truth() - scores[k].score.falsity(); },
      true, epsilon);
  auto calm = best_within(
      margin, [&](std::size_t k) { return scores[k].score.indeterminacy(); }, false,
      epsilon);
  return {std::move(calm), true};
}

std::vector<std::string> names(TripletSpan scores, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (auto k : idx) {
    out.push_back(scores[k].candidate);
  }
  return out;
}

std::string short_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::vector<RiskNote> risk_notes(TripletSpan scores, const std::vector<std::size_t>& winners,
                                 double epsilon) {
  auto contenders = optimistic_indices(scores, epsilon);
  for (auto k : conservative_indices(scores, epsilon)) {
    if (std::find(contenders.begin(), contenders.end(), k) == contenders.end()) {
      contenders.push_back(k);
    }
  }
  std::sort(contenders.begin(), contenders.end());

  std::vector<RiskNote> notes;
  for (auto w : winners) {
    RiskNote note;
    note.candidate = scores[w].candidate;
    note.indeterminacy = scores[w].score.indeterminacy();
    const std::string own = "i(" + note.candidate + ") = " + short_real(note.indeterminacy);
    for (auto c : contenders) {
      if (c == w) {
        continue;
      }
      RiskComparison cmp;
      cmp.other = scores[c].candidate;
      cmp.other_indeterminacy = scores[c].score.indeterminacy();
      const std::string theirs =
          "i(" + cmp.other + ") = " + short_real(cmp.other_indeterminacy);
      if (note.indeterminacy > cmp.other_indeterminacy + epsilon) {
        cmp.relation = RiskRelation::Higher;
        note.text += own + " exceeds " + theirs + ": choosing " + note.candidate +
                     " over " + cmp.other + " carries greater risk";
      } else if (note.indeterminacy < cmp.other_indeterminacy - epsilon) {
        cmp.relation = RiskRelation::Lower;
        note.text += own + " is below " + theirs + ": choosing " + note.candidate +
                     " over " + cmp.other + " carries less risk";
      } else {
        cmp.relation = RiskRelation::Equal;
        note.text += own + " equals " + theirs + ": no difference in risk";
      }
      note.text += "; ";
      note.comparisons.push_back(std::move(cmp));
    }
    if (note.comparisons.empty()) {
      note.text = own + "; no other contender";
    } else {
      note.text.resize(note.text.size() - 2);
    }
    notes.push_back(std::move(note));
  }
  return notes;
}

}  // namespace

std::string_view cell_kind(const Cell& cell) noexcept {
  return std::visit(overloaded{
                        [](const BinaryCell&) { return std::string_view("binary"); },
                        [](const GradeCell&) { return std::string_view("grade"); },
                        [](const GreyNumber&) { return std::string_view("grey number"); },
                        [](const NeutrosophicTriplet&) {
                          return std::string_view("neutrosophic triplet");
                        },
                    },
                    cell);
}

DecisionTable::DecisionTable(std::vector<std::string> candidates,
                             std::vector<std::string> parameters, std::vector<Cell> cells)
    : candidates_(std::move(candidates)),
      parameters_(std::move(parameters)),
      cells_(std::move(cells)) {
  if (candidates_.empty()) {
    throw DomainError("decision table needs at least one candidate");
  }
  if (parameters_.empty()) {
    throw DomainError("decision table needs at least one parameter");
  }
  require_unique_ids(candidates_, "candidate");
  require_unique_ids(parameters_, "parameter");
  if (cells_.size() != candidates_.size() * parameters_.size()) {
    throw DomainError("decision table has " + std::to_string(cells_.size()) +
                      " cells, expected " + std::to_string(candidates_.size()) + "x" +
                      std::to_string(parameters_.size()));
  }
}

const Cell& DecisionTable::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols()) {
    throw std::out_of_range("DecisionTable::at");
  }
  return cells_[row * cols() + col];
}

std::span<const Cell> DecisionTable::row(std::size_t row) const {
  if (row >= rows()) {
    throw std::out_of_range("DecisionTable::row");
  }
  return std::span<const Cell>(cells_).subspan(row * cols(), cols());
}

BinaryScores choice_values_binary(const DecisionTable& table) {
  BinaryScores out;
  out.reserve(table.rows());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    std::size_t sum = 0;
    for (std::size_t c = 0; c < table.cols(); ++c) {
      const auto* bin = std::get_if<BinaryCell>(&table.at(r, c));
      if (bin == nullptr) {
        mismatch(table, r, c, "binary", "0/1");
      }
      sum += bin->value ? 1 : 0;
    }
    out.push_back({table.candidates()[r], sum});
  }
  return out;
}

GreyScores choice_values_grey(const DecisionTable& table, const GradeScale& scale) {
  GreyScores out;
  out.reserve(table.rows());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    std::size_t crisp = 0;
    std::optional<GreyNumber> grey;
    auto accumulate = [&](const GreyNumber& g) { grey = grey ? *grey + g : g; };
    for (std::size_t c = 0; c < table.cols(); ++c) {
      std::visit(overloaded{
                     [&](const BinaryCell& b) { crisp += b.value ? 1 : 0; },
                     [&](const GradeCell& g) {
                       auto interval = scale.find(g.label);
                       if (!interval) {
                         throw UnknownGradeError(g.label, r, c, table.candidates()[r],
                                                 table.parameters()[c]);
                       }
                       accumulate(*interval);
                     },
                     [&](const GreyNumber& g) { accumulate(g); },
                     [&](const NeutrosophicTriplet&) {
                       mismatch(table, r, c, "grey", "binary, grade and grey number");
                     },
                 },
                 table.at(r, c));
    }
    double score = static_cast<double>(crisp);
    if (grey) {
      score += representative_value(*grey);
    }
    out.push_back({table.candidates()[r], score});
  }
  return out;
}

TripletScores choice_values_neutrosophic(const DecisionTable& table) {
  static const NeutrosophicTriplet kTrue(1.0, 0.0, 0.0);
  static const NeutrosophicTriplet kFalse(0.0, 0.0, 1.0);
  TripletScores out;
  out.reserve(table.rows());
  std::vector<NeutrosophicTriplet> row;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    row.clear();
    for (std::size_t c = 0; c < table.cols(); ++c) {
      const Cell& cell = table.at(r, c);
      if (const auto* bin = std::get_if<BinaryCell>(&cell)) {
        row.push_back(bin->value ? kTrue : kFalse);
      } else if (const auto* triplet = std::get_if<NeutrosophicTriplet>(&cell)) {
        row.push_back(*triplet);
      } else {
        mismatch(table, r, c, "neutrosophic", "binary and neutrosophic triplet",
                 "replace it with a triplet (t;i;f), or use the grey method");
      }
    }
    out.push_back({table.candidates()[r], mean(std::span<const NeutrosophicTriplet>(row))});
  }
  return out;
}

std::vector<std::string> rank_optimistic(TripletSpan scores, double epsilon) {
  require_epsilon(epsilon);
  return names(scores, optimistic_indices(scores, epsilon));
}

std::vector<std::string> rank_conservative(TripletSpan scores, double epsilon) {
  require_epsilon(epsilon);
  return names(scores, conservative_indices(scores, epsilon));
}

CombinedRanking combined_ranking(TripletSpan scores, double epsilon) {
  require_epsilon(epsilon);
  auto result = combined_indices(scores, epsilon);
  return {names(scores, result.winners), result.used_fallback};
}

std::vector<std::string> rank_combined(TripletSpan scores, double epsilon) {
  return combined_ranking(scores, epsilon).winners;
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Binary:
      return "binary";
    case Method::Grey:
      return "grey";
    case Method::Neutrosophic:
      return "neutrosophic";
  }
  return "unknown";
}

std::string_view to_string(Criterion criterion) noexcept {
  switch (criterion) {
    case Criterion::Optimistic:
      return "optimistic";
    case Criterion::Conservative:
      return "conservative";
    case Criterion::Combined:
      return "combined";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  for (auto m : {Method::Binary, Method::Grey, Method::Neutrosophic}) {
    if (to_string(m) == text) {
      return m;
    }
  }
  return std::nullopt;
}

std::optional<Criterion> parse_criterion(std::string_view text) noexcept {
  for (auto c : {Criterion::Optimistic, Criterion::Conservative, Criterion::Combined}) {
    if (to_string(c) == text) {
      return c;
    }
  }
  return std::nullopt;
}

DecisionReport decide(const DecisionTable& table, Method method,
                      const DecideOptions& options) {
  if (!std::isfinite(options.epsilon) || options.epsilon <= 0.0) {
    throw InvalidOptionsError("epsilon must be a finite positive real");
  }
  if (options.scale && method != Method::Grey) {
    throw InvalidOptionsError("a grade scale applies only to the grey method");
  }
  if (options.criterion && method != Method::Neutrosophic) {
    throw InvalidOptionsError("a ranking criterion applies only to the neutrosophic method");
  }

  DecisionReport report;
  report.method = method;
  report.epsilon = options.epsilon;

  auto pick_real = [&](const std::vector<double>& values) {
    auto pool = all_indices(values.size());
    auto best = best_within(
        pool, [&](std::size_t k) { return values[k]; }, true, options.epsilon);
    for (auto k : best) {
      report.winners.push_back(table.candidates()[k]);
    }
  };

  switch (method) {
    case Method::Binary: {
      std::vector<double> values;
      for (auto& s : choice_values_binary(table)) {
        values.push_back(static_cast<double>(s.score));
        report.scores.push_back({std::move(s.candidate), s.score});
      }
      pick_real(values);
      break;
    }
    case Method::Grey: {
      const GradeScale scale = options.scale ? *options.scale : default_scale();
      std::vector<double> values;
      for (auto& s : choice_values_grey(table, scale)) {
        values.push_back(s.score);
        report.scores.push_back({std::move(s.candidate), s.score});
      }
      pick_real(values);
      break;
    }
    case Method::Neutrosophic: {
      const auto criterion = options.criterion.value_or(Criterion::Combined);
      report.criterion = criterion;
      const auto scores = choice_values_neutrosophic(table);
      std::vector<std::size_t> winners;
      switch (criterion) {
        case Criterion::Optimistic:
          winners = optimistic_indices(scores, options.epsilon);
          break;
        case Criterion::Conservative:
          winners = conservative_indices(scores, options.epsilon);
          break;
        case Criterion::Combined: {
          auto combined = combined_indices(scores, options.epsilon);
          winners = std::move(combined.winners);
          report.flags.push_back(
              "combined criterion: winners are the intersection of the optimistic and "
              "conservative winner sets (library convention)");
          if (combined.used_fallback) {
            report.flags.push_back(
                "combined criterion fallback: optimistic and conservative winners are "
                "disjoint; ranked by greatest t - f, then lowest i");
          }
          break;
        }
      }
      report.winners = names(scores, winners);
      report.risk_notes = risk_notes(scores, winners, options.epsilon);
      for (const auto& s : scores) {
        report.scores.push_back({s.candidate, s.score});
      }
      break;
    }
  }
  return report;
}

}  // namespace softdm
