#pragma once

#include <stdexcept>
#include <string>

namespace isoprof {

// An exhaustive search or enumeration hit its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Input data failed a structural check (group axioms, partitions, maps).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isoprof
