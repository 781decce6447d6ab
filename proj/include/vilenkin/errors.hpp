#pragma once

#include <stdexcept>

namespace vilenkin {

// Operands disagree on a structural parameter (prime, precision, dimension).
struct PrecisionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input lies outside the documented domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace vilenkin
