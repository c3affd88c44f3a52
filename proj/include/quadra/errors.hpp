#pragma once

#include <stdexcept>
#include <string>

namespace quadra {

// Thrown when an enumeration or expansion would exceed a hard cap.
// The CLI maps it to exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition of an operation not met (wrong block sizes, bad range, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

inline void guard(bool ok, const std::string& what) {
  if (!ok) throw ResourceLimit(what);
}

}  // namespace quadra
