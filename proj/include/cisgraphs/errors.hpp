#pragma once

#include <stdexcept>
#include <string>

namespace cisgraphs {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 / edge-list text or an unknown identifier.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation would produce a graph beyond the 64-vertex word size.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A clique or stable-set family grew past the configured cap.
class FamilyCapExceeded : public Error {
 public:
  using Error::Error;
};

/// The input is outside the range an exact procedure supports (e.g. LP
/// properties above 16 vertices).
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// A backtracking search hit its node budget without a decision.
class SearchUndecided : public Error {
 public:
  using Error::Error;
};

/// A computed result failed its own re-verification. Always a bug.
class InternalVerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cisgraphs
