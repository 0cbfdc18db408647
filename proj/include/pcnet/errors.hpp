#pragma once

#include <stdexcept>

namespace pcnet {

// Shape or dimension disagreement between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input values violate a documented precondition.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// API misuse, e.g. operations called in an unsupported order.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Numerical breakdown (singular matrix, undefined statistic).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed, truncated or version-mismatched file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pcnet
