#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxtimes {

// Base class for all errors thrown by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes are incompatible (multiplication, addition, comparisons).
class dimension_error : public error {
 public:
  explicit dimension_error(const std::string& what) : error(what) {}
};

// A value or matrix violates a precondition (negative entry, zero column,
// malformed fraction, non-reciprocal comparison matrix, ...).
class invalid_input_error : public error {
 public:
  explicit invalid_input_error(const std::string& what) : error(what) {}
};

// A comparison matrix fails the reciprocity requirement a[i][j]*a[j][i] == 1.
// Carries the offending index pairs (0-based, upper triangle).
class reciprocity_error : public invalid_input_error {
 public:
  reciprocity_error(const std::string& what,
                    std::vector<std::pair<std::size_t, std::size_t>> pairs)
      : invalid_input_error(what), violations_(std::move(pairs)) {}

  const std::vector<std::pair<std::size_t, std::size_t>>& violations() const {
    return violations_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> violations_;
};

// The spectral radius is zero where a positive one is required.
class zero_spectral_radius_error : public error {
 public:
  explicit zero_spectral_radius_error(const std::string& what) : error(what) {}
};

// A configured hard limit (enumeration cap, search budget) refused the run.
class limit_error : public error {
 public:
  explicit limit_error(const std::string& what) : error(what) {}
};

// Malformed input text. Position is 1-based; 0 means "not applicable".
class parse_error : public invalid_input_error {
 public:
  explicit parse_error(const std::string& what, std::size_t line = 0,
                       std::size_t column = 0)
      : invalid_input_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace maxtimes
