#pragma once

#include <stdexcept>
#include <string>

namespace grpi {

// Malformed input: bad group table, degree violation, syntax error, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured cell budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters for which a bound formula degenerates.
class DegenerateParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace grpi
