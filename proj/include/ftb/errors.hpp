#pragma once

#include <stdexcept>
#include <string>

namespace ftb {

// Malformed input, violated preconditions, or an exhaustive-search cap that
// was exceeded. The CLI maps these to exit code 3.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance admits no feasible answer (e.g. the graph is not
// k-connected). The CLI maps these to exit code 2.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceededError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace ftb
