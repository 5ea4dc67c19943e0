#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhall {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at column " + std::to_string(position + 1) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A cut that is not admissible for the forest it is applied to, or cuts
/// that live on different forests.
class InvalidCut : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate an operation's preconditions (wrong arity,
/// mismatched objects, non-subforest, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Graph data that violates the half-edge or phi^3 constraints.
class InvalidGraph : public Error {
 public:
  enum class Kind { MalformedPairing, NotTrivalent, ExternalCount, UnknownId };

  InvalidGraph(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Exhaustive enumeration refused because the input exceeds the size guard.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Composition of graph morphisms whose intermediate intersection or image
/// is not a subobject.
class CompositionUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace rhall
