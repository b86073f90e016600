#pragma once

// Test-only reference machinery: exact rational arithmetic for frozen
// expected values and seeded generators for property tests. Nothing here
// calls into the library's arithmetic.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "softdm/decision.hpp"

namespace oracle {

class Fraction {
 public:
  Fraction(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) {
      throw std::invalid_argument("zero denominator");
    }
    normalize();
  }

  // Exact value of a plain decimal literal such as "0.075".
  static Fraction decimal(std::string_view text) {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool fraction = false;
    for (char c : text) {
      if (c == '.') {
        fraction = true;
        continue;
      }
      num = num * 10 + (c - '0');
      if (fraction) {
        den *= 10;
      }
    }
    return {num, den};
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Fraction dec(std::string_view text) { return Fraction::decimal(text); }

struct ExactTriplet {
  Fraction t, i, f;
};

// Mean of equally weighted triplets given as decimal literals.
inline ExactTriplet exact_mean(const std::vector<std::vector<std::string_view>>& row) {
  Fraction t, i, f;
  for (const auto& cell : row) {
    t = t + dec(cell[0]);
    i = i + dec(cell[1]);
    f = f + dec(cell[2]);
  }
  Fraction n(static_cast<std::int64_t>(row.size()));
  return {t / n, i / n, f / n};
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(SOFTDM_DATA_DIR) + "/" + name, std::ios::binary);
  if (!in) {
    throw std::runtime_error("missing data file " + name);
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return index(0, 1) == 1; }

  softdm::GreyNumber grey(double lo = -100.0, double hi = 100.0) {
    double a = real(lo, hi);
    double b = real(lo, hi);
    return softdm::GreyNumber(std::min(a, b), std::max(a, b));
  }

  softdm::NeutrosophicTriplet triplet() {
    return softdm::NeutrosophicTriplet(unit(), unit(), unit());
  }

  std::vector<std::string> ids(char prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back(std::string(1, prefix) + std::to_string(k + 1));
    }
    return out;
  }

  softdm::DecisionTable binary_table(std::size_t rows, std::size_t cols) {
    std::vector<softdm::Cell> cells;
    for (std::size_t k = 0; k < rows * cols; ++k) {
      cells.push_back(softdm::BinaryCell{coin()});
    }
    return {ids('P', rows), ids('e', cols), std::move(cells)};
  }

  // Binary, default-scale grade and unit-interval grey cells.
  softdm::DecisionTable grey_table(std::size_t rows, std::size_t cols) {
    static const char* kGrades[] = {"A", "B", "C", "D", "F"};
    std::vector<softdm::Cell> cells;
    for (std::size_t k = 0; k < rows * cols; ++k) {
      switch (index(0, 2)) {
        case 0:
          cells.push_back(softdm::BinaryCell{coin()});
          break;
        case 1:
          cells.push_back(softdm::GradeCell{kGrades[index(0, 4)]});
          break;
        default:
          cells.push_back(grey(0.0, 1.0));
      }
    }
    return {ids('P', rows), ids('e', cols), std::move(cells)};
  }

  softdm::DecisionTable triplet_table(std::size_t rows, std::size_t cols) {
    std::vector<softdm::Cell> cells;
    for (std::size_t k = 0; k < rows * cols; ++k) {
      if (coin()) {
        cells.push_back(softdm::BinaryCell{coin()});
      } else {
        cells.push_back(triplet());
      }
    }
    return {ids('P', rows), ids('e', cols), std::move(cells)};
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
