#pragma once

#include <stdexcept>
#include <string>

namespace omlab {

// Raised when a ball and a test function are not concentric. Only concentric
// configurations are integrated exactly; there is no numeric fallback.
class UnsupportedGeometry : public std::runtime_error {
 public:
  explicit UnsupportedGeometry(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a theorem fixture is run while one of its hypotheses fails and
// no override was requested.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace omlab
