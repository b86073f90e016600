#include "softdm/table_io.hpp"

#include <optional>
#include <unordered_set>

#include "softdm/error.hpp"
#include "softdm/real_text.hpp"

namespace softdm {
namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

bool is_blank(char c) noexcept { return c == ' ' || c == '\t'; }

Field trim(std::string_view text, std::size_t column) {
  std::size_t begin = 0;
  while (begin < text.size() && is_blank(text[begin])) {
    ++begin;
  }
  std::size_t end = text.size();
  while (end > begin && is_blank(text[end - 1])) {
    --end;
  }
  return {text.substr(begin, end - begin), column + begin};
}

std::vector<Line> split_lines(std::string_view text) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.starts_with(kBom)) {
    text.remove_prefix(kBom.size());
  }
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (line.ends_with('\r')) {
      line.remove_suffix(1);
    }
    lines.push_back({line, number++});
    if (end == std::string_view::npos) {
      break;
    }
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool blank_line(std::string_view text) {
  for (char c : text) {
    if (!is_blank(c)) {
      return false;
    }
  }
  return true;
}

std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    auto raw = line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                   : comma - start);
    fields.push_back(trim(raw, start + 1));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string_view token,
                       const std::string& what) {
  throw ParseError(line, column, std::string(token), what);
}

// Splits the body of a bracketed token on ';' and parses each component.
std::vector<double> parse_components(std::string_view token, std::size_t expected,
                                     const char* kind, std::size_t line,
                                     std::size_t column) {
  auto body = token.substr(1, token.size() - 2);
  std::vector<std::string_view> parts;
  while (true) {
    auto semi = body.find(';');
    parts.push_back(body.substr(0, semi));
    if (semi == std::string_view::npos) {
      break;
    }
    body.remove_prefix(semi + 1);
  }
  if (parts.size() != expected) {
    fail(line, column, token,
         "malformed cell token '" + std::string(token) + "': " + kind + " needs " +
             std::to_string(expected) + " components, found " +
             std::to_string(parts.size()));
  }
  std::vector<double> values;
  for (auto part : parts) {
    auto value = parse_unsigned_real(part);
    if (!value) {
      fail(line, column, token,
           "malformed cell token '" + std::string(token) + "': '" + std::string(part) +
               "' is not an unsigned decimal number");
    }
    values.push_back(*value);
  }
  return values;
}

GreyNumber parse_interval(std::string_view token, std::size_t line, std::size_t column) {
  auto v = parse_components(token, 2, "grey number", line, column);
  if (v[0] > v[1]) {
    fail(line, column, token,
         "grey number '" + std::string(token) + "' has lower bound above upper bound");
  }
  return GreyNumber(v[0], v[1]);
}

Cell parse_cell_at(std::string_view token, std::size_t line, std::size_t column) {
  if (token.empty()) {
    fail(line, column, token, "empty cell");
  }
  if (token == "0" || token == "1") {
    return BinaryCell{token == "1"};
  }
  if (token.front() == '[') {
    if (token.size() < 2 || token.back() != ']') {
      fail(line, column, token,
           "malformed cell token '" + std::string(token) + "': missing closing ']'");
    }
    return parse_interval(token, line, column);
  }
  if (token.front() == '(') {
    if (token.size() < 2 || token.back() != ')') {
      fail(line, column, token,
           "malformed cell token '" + std::string(token) + "': missing closing ')'");
    }
    auto v = parse_components(token, 3, "triplet", line, column);
    for (double x : v) {
      if (x > 1.0) {
        fail(line, column, token,
             "triplet '" + std::string(token) + "' has a component outside [0,1]");
      }
    }
    return NeutrosophicTriplet(v[0], v[1], v[2]);
  }
  if (is_grade_label(token)) {
    return GradeCell{std::string(token)};
  }
  fail(line, column, token,
       "malformed cell token '" + std::string(token) +
           "': expected 0, 1, a grade label, [lower;upper] or (t;i;f)");
}

void check_identifier(const Field& field, std::size_t line, const char* what,
                      std::unordered_set<std::string_view>& seen) {
  if (field.text.empty()) {
    fail(line, field.column, field.text, std::string("empty ") + what + " identifier");
  }
  if (!seen.insert(field.text).second) {
    fail(line, field.column, field.text,
         std::string("duplicate ") + what + " identifier '" + std::string(field.text) + "'");
  }
}

}  // namespace

Cell parse_cell(std::string_view token) { return parse_cell_at(token, 1, 1); }

std::string format_cell(const Cell& cell) {
  if (const auto* bin = std::get_if<BinaryCell>(&cell)) {
    return bin->value ? "1" : "0";
  }
  if (const auto* grade = std::get_if<GradeCell>(&cell)) {
    return grade->label;
  }
  if (const auto* grey = std::get_if<GreyNumber>(&cell)) {
    return to_string(*grey);
  }
  return to_string(std::get<NeutrosophicTriplet>(cell));
}

ParsedTable parse_table_document(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t at = 0;
  while (at < lines.size() && blank_line(lines[at].text)) {
    ++at;
  }
  if (at == lines.size()) {
    fail(lines.empty() ? 1 : lines.back().number, 1, "", "table has no header row");
  }

  const auto& header_line = lines[at++];
  auto header = split_fields(header_line.text);
  if (header.size() < 2) {
    fail(header_line.number, 1, header_line.text, "header row names no parameters");
  }
  std::vector<std::string> parameters;
  std::unordered_set<std::string_view> seen_params;
  for (std::size_t k = 1; k < header.size(); ++k) {
    check_identifier(header[k], header_line.number, "parameter", seen_params);
    parameters.emplace_back(header[k].text);
  }

  std::vector<std::string> candidates;
  std::vector<Cell> cells;
  std::vector<std::size_t> row_lines;
  std::unordered_set<std::string_view> seen_candidates;
  for (; at < lines.size(); ++at) {
    const auto& line = lines[at];
    if (blank_line(line.text)) {
      continue;
    }
    auto fields = split_fields(line.text);
    if (fields.size() != header.size()) {
      fail(line.number, 1, line.text,
           "ragged row: expected " + std::to_string(header.size()) + " fields, found " +
               std::to_string(fields.size()));
    }
    check_identifier(fields[0], line.number, "candidate", seen_candidates);
    candidates.emplace_back(fields[0].text);
    row_lines.push_back(line.number);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      cells.push_back(parse_cell_at(fields[k].text, line.number, fields[k].column));
    }
  }
  if (candidates.empty()) {
    fail(header_line.number, 1, header_line.text, "table has no candidate rows");
  }
  return {DecisionTable(std::move(candidates), std::move(parameters), std::move(cells)),
          std::move(row_lines)};
}

DecisionTable parse_table(std::string_view text) {
  return std::move(parse_table_document(text).table);
}

std::string write_table(const DecisionTable& table) {
  std::string out;
  for (const auto& parameter : table.parameters()) {
    out += ',';
    out += parameter;
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    out += table.candidates()[r];
    for (const auto& cell : table.row(r)) {
      out += ',';
      out += format_cell(cell);
    }
    out += '\n';
  }
  return out;
}

GradeScale parse_scale(std::string_view text) {
  std::vector<ScaleEntry> entries;
  for (const auto& line : split_lines(text)) {
    auto whole = trim(line.text, 1);
    if (whole.text.empty() || whole.text.front() == '#') {
      continue;
    }
    auto eq = whole.text.find('=');
    if (eq == std::string_view::npos) {
      fail(line.number, whole.column, whole.text,
           "expected LABEL=[lower;upper], found '" + std::string(whole.text) + "'");
    }
    auto label = trim(whole.text.substr(0, eq), whole.column);
    auto value = trim(whole.text.substr(eq + 1), whole.column + eq + 1);
    if (!is_grade_label(label.text)) {
      fail(line.number, label.column, label.text,
           "grade label '" + std::string(label.text) +
               "' must match [A-Za-z][A-Za-z0-9_]*");
    }
    if (value.text.size() < 2 || value.text.front() != '[' || value.text.back() != ']') {
      fail(line.number, value.column, value.text,
           "grade interval '" + std::string(value.text) + "' must look like [lower;upper]");
    }
    entries.push_back(
        {std::string(label.text), parse_interval(value.text, line.number, value.column)});
  }
  return GradeScale(std::move(entries));
}

std::string write_scale(const GradeScale& scale) {
  std::string out;
  for (const auto& entry : scale.entries()) {
    out += entry.label;
    out += '=';
    out += to_string(entry.interval);
    out += '\n';
  }
  return out;
}

}  // namespace softdm
