#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcalc {

/// Mathematical domain violation: invalid operand, point outside a function's
/// domain, failed differentiability condition, and the like.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical failure of an adaptive algorithm (interval budget exhausted).
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with the byte offset of the failure and the token set that
/// would have been accepted there.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected = {})
      : std::invalid_argument(std::move(message)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace bcalc
