#pragma once

#include <string>

#include "softdm/decision.hpp"

namespace softdm {

// Plain-text report: one `key: value` block per report field.
std::string render_text(const DecisionReport& report);

// JSON object with the same fields, in the same order, as the text report.
std::string render_json(const DecisionReport& report);

}  // namespace softdm
