#include "softdm/report.hpp"

#include "json.hpp"
#include "softdm/real_text.hpp"

namespace softdm {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string_view relation_name(RiskRelation relation) {
  switch (relation) {
    case RiskRelation::Higher:
      return "higher";
    case RiskRelation::Lower:
      return "lower";
    case RiskRelation::Equal:
      return "equal";
  }
  return "equal";
}

std::string score_text(const Score& score) {
  return std::visit(overloaded{
                        [](std::size_t v) { return std::to_string(v); },
                        [](double v) { return format_real(v); },
                        [](const NeutrosophicTriplet& v) { return to_string(v); },
                    },
                    score);
}

}  // namespace

std::string render_text(const DecisionReport& report) {
  std::string out;
  out += "method: ";
  out += to_string(report.method);
  out += "\ncriterion: ";
  out += report.criterion ? std::string(to_string(*report.criterion)) : "none";
  out += "\nepsilon: " + format_real(report.epsilon);
  out += "\nscores:\n";
  for (const auto& s : report.scores) {
    out += "  " + s.candidate + ": " + score_text(s.score) + "\n";
  }
  out += "winners: ";
  for (std::size_t k = 0; k < report.winners.size(); ++k) {
    out += (k ? ", " : "") + report.winners[k];
  }
  out += '\n';
  if (report.risk_notes.empty()) {
    out += "risk: none\n";
  } else {
    out += "risk:\n";
    for (const auto& note : report.risk_notes) {
      out += "  " + note.candidate + ": " + note.text + "\n";
    }
  }
  if (report.flags.empty()) {
    out += "flags: none\n";
  } else {
    out += "flags:\n";
    for (const auto& flag : report.flags) {
      out += "  " + flag + "\n";
    }
  }
  return out;
}

std::string render_json(const DecisionReport& report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["method"] = to_string(report.method);
  doc["criterion"] = report.criterion ? json(to_string(*report.criterion)) : json(nullptr);
  doc["epsilon"] = report.epsilon;

  json scores = json::array();
  for (const auto& s : report.scores) {
    json value = std::visit(overloaded{
                                [](std::size_t v) { return json(v); },
                                [](double v) { return json(v); },
                                [](const NeutrosophicTriplet& v) {
                                  return json{{"t", v.truth()},
                                              {"i", v.indeterminacy()},
                                              {"f", v.falsity()}};
                                },
                            },
                            s.score);
    scores.push_back({{"candidate", s.candidate}, {"score", std::move(value)}});
  }
  doc["scores"] = std::move(scores);
  doc["winners"] = report.winners;

  json notes = json::array();
  for (const auto& note : report.risk_notes) {
    json comparisons = json::array();
    for (const auto& cmp : note.comparisons) {
      comparisons.push_back({{"other", cmp.other},
                             {"indeterminacy", cmp.other_indeterminacy},
                             {"relation", relation_name(cmp.relation)}});
    }
    notes.push_back({{"candidate", note.candidate},
                     {"indeterminacy", note.indeterminacy},
                     {"comparisons", std::move(comparisons)},
                     {"text", note.text}});
  }
  doc["risk"] = std::move(notes);
  doc["flags"] = report.flags;
  return doc.dump(2) + "\n";
}

}  // namespace softdm
