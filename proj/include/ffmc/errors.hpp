#pragma once

#include <stdexcept>
#include <string>

namespace ffmc {

// Error taxonomy mirrored by the CLI exit codes:
//   DomainError    -> 2   (parameters outside a theorem's hypotheses)
//   ParseError     -> 3   (malformed input files or flags)
//   BudgetError    -> 4   (enumeration would exceed the configured budget)
//   InvariantError -> 1   (an internal invariant a theorem guarantees was
//                          violated; this must surface loudly, never be
//                          swallowed)

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ffmc
