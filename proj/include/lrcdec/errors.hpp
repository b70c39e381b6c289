#pragma once

#include <stdexcept>
#include <string>

namespace lrcdec {

// Invalid parameters or inputs that violate an operation's precondition.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Arithmetic outside the domain of a formula (division by zero, square root
// of a negative discriminant and the like).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A search or enumeration exceeded its configured work limit.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lrcdec
