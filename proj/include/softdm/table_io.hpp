#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "softdm/decision.hpp"
#include "softdm/grade_scale.hpp"

namespace softdm {

// Decision tables are comma-separated text:
//
//   ,e1,e2,e3,e4
//   P1,1,0,0,C
//   P2,(1;0;0),[0.5;0.59],1,0
//
// The first header field is a corner label and is ignored. Each following
// line is a candidate identifier and one token per parameter:
//
//   0 | 1                      binary
//   [A-Za-z][A-Za-z0-9_]*      grade label
//   [lower;upper]              grey number
//   (t;i;f)                    neutrosophic triplet
//
// Numbers are unsigned decimals with an optional exponent. Spaces and tabs
// around a field are trimmed; tokens themselves hold no whitespace. Lines end
// in \n or \r\n; blank lines are skipped and a leading UTF-8 BOM is dropped.

struct ParsedTable {
  DecisionTable table;
  // 1-based source line of each candidate row.
  std::vector<std::size_t> row_lines;
};

// Throws ParseError with the line, column and offending token.
ParsedTable parse_table_document(std::string_view text);
DecisionTable parse_table(std::string_view text);

// Throws ParseError for a token that is not a well-formed cell.
Cell parse_cell(std::string_view token);

std::string format_cell(const Cell& cell);

// Output uses an empty corner label and \n line endings. Numbers use the
// shortest decimal that reads back to the same double.
std::string write_table(const DecisionTable& table);

// Grade scales are one `LABEL=[lower;upper]` entry per line, best grade
// first. Spaces around '=' are allowed, as are blank lines and lines whose
// first non-blank character is '#'.
//
// Throws ParseError on grammar errors and ValidationError listing every
// violated scale invariant.
GradeScale parse_scale(std::string_view text);
std::string write_scale(const GradeScale& scale);

}  // namespace softdm
