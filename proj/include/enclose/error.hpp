#pragma once

#include <stdexcept>
#include <string>

namespace enclose {

// A caller-supplied argument or instance violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state that a proven guarantee rules out. Seeing one means a bug here,
// not bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bounded search ran out of nodes before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance is larger than an exhaustive routine is allowed to handle.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace enclose
