#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace softdm {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates the invariants of a domain type (interval bounds,
// triplet box, non-positive scalar, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownGradeError : public Error {
 public:
  explicit UnknownGradeError(std::string label)
      : Error("unknown grade '" + label + "'"), label_(std::move(label)) {}

  // Raised while scoring a table: records which cell held the label.
  UnknownGradeError(std::string label, std::size_t row, std::size_t column,
                    const std::string& candidate, const std::string& parameter)
      : Error("unknown grade '" + label + "' in cell (" + candidate + ", " +
              parameter + ")"),
        label_(std::move(label)),
        row_(row),
        column_(column),
        located_(true) {}

  const std::string& label() const noexcept { return label_; }
  bool located() const noexcept { return located_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string label_;
  std::size_t row_ = 0;
  std::size_t column_ = 0;
  bool located_ = false;
};

// A table cell whose kind the requested method cannot consume.
class CellMismatchError : public Error {
 public:
  CellMismatchError(std::string message, std::size_t row, std::size_t column,
                    std::string candidate, std::string parameter)
      : Error(std::move(message)),
        row_(row),
        column_(column),
        candidate_(std::move(candidate)),
        parameter_(std::move(parameter)) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& candidate() const noexcept { return candidate_; }
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::size_t row_;
  std::size_t column_;
  std::string candidate_;
  std::string parameter_;
};

// Options passed to decide() that do not fit the selected method.
class InvalidOptionsError : public Error {
 public:
  using Error::Error;
};

// Text input that does not follow the table or scale grammar. Line and
// column are 1-based; column counts bytes.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token,
             const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

// A grade scale that breaks one or more scale invariants.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept {
    return violations_;
  }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "invalid grade scale";
    for (const auto& item : items) {
      out += "; ";
      out += item;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace softdm
