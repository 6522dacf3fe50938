#pragma once

#include <stdexcept>
#include <string>

namespace totcol {

/// An argument violates an operation's documented precondition.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text (JSON, CSV, DIMACS, CLI values).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced something that does not verify and could not be repaired.
class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of nodes before reaching a verdict.
class budget_exhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace totcol
