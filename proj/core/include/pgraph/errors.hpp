#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgraph {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State construction: node count is zero.
class EmptyDomain : public Error {
 public:
  using Error::Error;
};

/// State construction: successor table length disagrees with the node count.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// State construction: a successor entry is not a valid node.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed graph, operation, or program text. `line()` is 1-based and
/// 0 when the input is not line-addressed (e.g. a single operation string).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        message_(message),
        line_(line) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string message_;
  std::size_t line_;
};

/// Operation text with an empty left-hand bit string: there is no label to
/// reassign.
class EmptyTarget : public ParseError {
 public:
  using ParseError::ParseError;
};

/// An operation's origin node does not exist in the state it is applied to.
class OriginOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Boolean cell whose two child edges coincide; true and false become
/// indistinguishable there.
class AmbiguousCell : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration requested beyond the supported node count.
class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pgraph
