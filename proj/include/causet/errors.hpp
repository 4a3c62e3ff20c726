#pragma once

#include <stdexcept>
#include <string>

namespace causet {

/// Input outside a function's documented domain (bad dimension, pole, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure could not meet its requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace causet
