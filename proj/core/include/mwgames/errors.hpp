#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mwgames {

// Malformed game, state or strategy input. Carries the offending cell when
// one can be named.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what,
                      std::optional<std::size_t> row = std::nullopt,
                      std::optional<std::size_t> col = std::nullopt)
      : std::runtime_error(what), row_(row), col_(col) {}

  std::optional<std::size_t> row() const { return row_; }
  std::optional<std::size_t> col() const { return col_; }

 private:
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

// Sizes of games, states, families or strategies do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state or strategy that violates its validity conditions.
class StateError : public std::invalid_argument {
 public:
  explicit StateError(const std::string& what, std::optional<double> norm = std::nullopt)
      : std::invalid_argument(what), norm_(norm) {}

  // Computed norm, for ket expressions that are not normalized.
  std::optional<double> norm() const { return norm_; }

 private:
  std::optional<double> norm_;
};

// The exact pipeline was asked to run on weights that did not snap to
// rationals.
class InexactWeightsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed object broke an invariant it must hold by construction.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mwgames
