#pragma once

#include <stdexcept>
#include <string>

namespace hyperinfect {

/// Bad parameters or malformed input. The CLI maps this to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The exact search would exceed its closure-evaluation budget.
/// The CLI maps this to exit code 2.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperinfect
