#pragma once

#include <stdexcept>

namespace smarand {

// Raised when a computation would exceed memory or enumeration limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a certified comparison cannot be decided below the precision cap.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace smarand
