#pragma once

#include <stdexcept>
#include <string>

namespace mixvol {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

/// Raised when two computations that must agree do not. The CLI maps it to
/// exit status 2.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mixvol
