#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace dsum {

/// Compact rendering for costs/budgets in error messages ("4.561e+81").
inline std::string format_quantity(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

/// Thrown when an operation would exceed its configured resource budget.
/// Carries the estimated cost so front ends can report how far over budget
/// the request was before refusing it.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double estimated_cost, double budget)
      : std::runtime_error(what), estimated_(estimated_cost), budget_(budget) {}

  double estimated_cost() const noexcept { return estimated_; }
  double budget() const noexcept { return budget_; }

 private:
  double estimated_;
  double budget_;
};

}  // namespace dsum
