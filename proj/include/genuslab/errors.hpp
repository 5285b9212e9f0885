// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>

namespace genuslab {

// The artifact only handles the maximal-order family: fundamental
// discriminants D = -4N with N squarefree and -N != 1 (mod 4).
// Everything outside it is rejected with this error.
class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coefficient-cache file could not be read, written, or validated.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genuslab
