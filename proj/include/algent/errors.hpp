#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algent {

// Domain failures: singular matrices, budgets, maps that cannot be composed.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(const std::string& what, std::size_t reached)
      : DomainError(what), reached_(reached) {}
  // Iteration index (or term count) reached when the budget tripped.
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace algent
