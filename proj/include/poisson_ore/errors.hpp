#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poisson_ore {

/// Operands live in different polynomial rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A variable name is not part of the ring in use.
class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation is violated
/// (e.g. inducing a derivation on a quotient by a non-stable ideal).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Seeing this means a bug.
class InternalAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntax error with the 0-based character offset where it was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}
  std::size_t position() const { return position_; }
  /// Message without the position suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace poisson_ore
