#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace softdm {

// A parametrized family of subsets of a finite universe: each parameter maps
// to the value set of universe elements that satisfy it. Universe and
// parameter lists keep their order so tabulation is deterministic.
class SoftSet {
 public:
  // Throws DomainError on empty or duplicate identifiers, on a value set
  // keyed by an unknown parameter, or on a member outside the universe.
  // Parameters without an entry in `value_sets` get an empty value set.
  SoftSet(std::vector<std::string> universe, std::vector<std::string> parameters,
          std::map<std::string, std::set<std::string>> value_sets);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& parameters() const noexcept {
    return parameters_;
  }

  // Throws DomainError for an unknown parameter.
  const std::set<std::string>& value_set(std::string_view parameter) const;

  bool contains(std::string_view parameter, std::string_view element) const;

  friend bool operator==(const SoftSet&, const SoftSet&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::map<std::string, std::set<std::string>, std::less<>> value_sets_;
};

// Binary matrix form of a soft set: rows are universe elements, columns are
// parameters, a cell is 1 iff the element is in the parameter's value set.
class BinaryTable {
 public:
  // `cells` is row-major. Throws DomainError on a size mismatch, a value
  // other than 0 or 1, or empty / duplicate identifiers.
  BinaryTable(std::vector<std::string> row_ids, std::vector<std::string> col_ids,
              std::vector<std::uint8_t> cells);

  const std::vector<std::string>& row_ids() const noexcept { return row_ids_; }
  const std::vector<std::string>& col_ids() const noexcept { return col_ids_; }
  std::size_t rows() const noexcept { return row_ids_.size(); }
  std::size_t cols() const noexcept { return col_ids_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const;
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

  friend bool operator==(const BinaryTable&, const BinaryTable&) = default;

 private:
  std::vector<std::string> row_ids_;
  std::vector<std::string> col_ids_;
  std::vector<std::uint8_t> cells_;
};

BinaryTable tabulate(const SoftSet& soft_set);
SoftSet from_table(const BinaryTable& table);

// Soft set of closed alpha-cuts {x : m(x) >= alpha}, one parameter per alpha.
// Parameter identifiers are the alphas in shortest round-trip decimal form.
// Throws DomainError for memberships or alphas outside [0,1], duplicate
// elements, or repeated alphas.
SoftSet fuzzy_to_soft(std::span<const std::pair<std::string, double>> membership,
                      std::span<const double> alphas);

}  // namespace softdm
