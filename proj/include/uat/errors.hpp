#pragma once

#include <stdexcept>
#include <string>

namespace uat {

// Raised when input data (point files, CLI parameters, malformed scalars)
// cannot be processed.  The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal invariant fails (a cross-check between two
// independent computations disagrees).  The CLI maps this to exit code 3.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace uat
