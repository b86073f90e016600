#include "softdm/soft_set.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "softdm/error.hpp"
#include "softdm/real_text.hpp"

namespace softdm {
namespace {

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

}  // namespace

SoftSet::SoftSet(std::vector<std::string> universe, std::vector<std::string> parameters,
                 std::map<std::string, std::set<std::string>> value_sets)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  require_unique_ids(universe_, "element");
  require_unique_ids(parameters_, "parameter");

  const std::set<std::string_view> members(universe_.begin(), universe_.end());
  for (auto& [parameter, elements] : value_sets) {
    if (std::find(parameters_.begin(), parameters_.end(), parameter) == parameters_.end()) {
      throw DomainError("value set given for unknown parameter '" + parameter + "'");
    }
    for (const auto& element : elements) {
      if (!members.contains(element)) {
        throw DomainError("value set of '" + parameter + "' holds '" + element +
                          "', which is not in the universe");
      }
    }
  }
  for (const auto& parameter : parameters_) {
    auto node = value_sets.extract(parameter);
    value_sets_.emplace(parameter, node ? std::move(node.mapped()) : std::set<std::string>{});
  }
}

const std::set<std::string>& SoftSet::value_set(std::string_view parameter) const {
  auto it = value_sets_.find(parameter);
  if (it == value_sets_.end()) {
    throw DomainError("unknown parameter '" + std::string(parameter) + "'");
  }
  return it->second;
}

bool SoftSet::contains(std::string_view parameter, std::string_view element) const {
  const auto& members = value_set(parameter);
  return members.find(std::string(element)) != members.end();
}

BinaryTable::BinaryTable(std::vector<std::string> row_ids, std::vector<std::string> col_ids,
                         std::vector<std::uint8_t> cells)
    : row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)), cells_(std::move(cells)) {
  require_unique_ids(row_ids_, "row");
  require_unique_ids(col_ids_, "column");
  if (cells_.size() != row_ids_.size() * col_ids_.size()) {
    throw DomainError("binary table has " + std::to_string(cells_.size()) +
                      " cells, expected " + std::to_string(row_ids_.size()) + "x" +
                      std::to_string(col_ids_.size()));
  }
  for (auto cell : cells_) {
    if (cell > 1) {
      throw DomainError("binary table cell must be 0 or 1, got " + std::to_string(cell));
    }
  }
}

std::uint8_t BinaryTable::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols()) {
    throw std::out_of_range("BinaryTable::at");
  }
  return cells_[row * cols() + col];
}

BinaryTable tabulate(const SoftSet& soft_set) {
  const auto& universe = soft_set.universe();
  const auto& parameters = soft_set.parameters();
  std::vector<std::uint8_t> cells;
  cells.reserve(universe.size() * parameters.size());
  for (const auto& element : universe) {
    for (const auto& parameter : parameters) {
      cells.push_back(soft_set.contains(parameter, element) ? 1 : 0);
    }
  }
  return BinaryTable(universe, parameters, std::move(cells));
}

SoftSet from_table(const BinaryTable& table) {
  std::map<std::string, std::set<std::string>> value_sets;
  for (std::size_t c = 0; c < table.cols(); ++c) {
    auto& members = value_sets[table.col_ids()[c]];
    for (std::size_t r = 0; r < table.rows(); ++r) {
      if (table.at(r, c) == 1) {
        members.insert(table.row_ids()[r]);
      }
    }
  }
  return SoftSet(table.row_ids(), table.col_ids(), std::move(value_sets));
}

SoftSet fuzzy_to_soft(std::span<const std::pair<std::string, double>> membership,
                      std::span<const double> alphas) {
  std::vector<std::string> universe;
  universe.reserve(membership.size());
  for (const auto& [element, degree] : membership) {
    if (!std::isfinite(degree) || degree < 0.0 || degree > 1.0) {
      throw DomainError("membership degree of '" + element + "' is " +
                        format_real(degree) + ", outside [0,1]");
    }
    universe.push_back(element);
  }

  std::vector<std::string> parameters;
  std::map<std::string, std::set<std::string>> value_sets;
  for (double alpha : alphas) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
      throw DomainError("alpha level " + format_real(alpha) + " is outside [0,1]");
    }
    auto id = format_real(alpha);
    auto& cut = value_sets[id];
    if (std::find(parameters.begin(), parameters.end(), id) != parameters.end()) {
      throw DomainError("alpha level " + id + " is repeated");
    }
    parameters.push_back(id);
    for (const auto& [element, degree] : membership) {
      if (degree >= alpha) {
        cut.insert(element);
      }
    }
  }
  return SoftSet(std::move(universe), std::move(parameters), std::move(value_sets));
}

}  // namespace softdm
