#pragma once

#include <stdexcept>
#include <string>

namespace qhs {

/// Weights that are not strictly increasing, not positive, not coprime or
/// not independent over the non-negative integers.
class InvalidWeights : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (forms, curves, JSON documents).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violating an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algebraic identity that must hold did not; indicates an engine bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qhs
