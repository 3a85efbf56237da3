#pragma once

#include <stdexcept>
#include <string>

namespace p5sparse {

/// Malformed or out-of-contract input (bad edge list, graph6 text, flags).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force solver or search was asked to go beyond its hard size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that a structure theorem guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace p5sparse
