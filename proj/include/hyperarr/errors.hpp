#pragma once

#include <stdexcept>

namespace hyperarr {

// Exceptions thrown across the library. The CLI maps them to exit codes:
// input/parse problems -> 2, budget or cross-check problems -> 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateAbscissa : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroPolynomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonIntegerCoefficients : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentLabel : std::logic_error {
  using std::logic_error::logic_error;
};
struct NotInBaseChamber : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BaseNotFound : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using IndexOutOfRange = std::out_of_range;

}  // namespace hyperarr
