#pragma once

#include <stdexcept>

namespace slzeta {

/// Base class for domain errors raised by the library. Usage and parse
/// errors derive from std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slzeta
