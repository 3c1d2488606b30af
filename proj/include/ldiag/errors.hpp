#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldiag {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed; `position` is a byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

// Diagram weight support does not project onto intervals [1..p] x [1..q].
struct GapError : Error {
  using Error::Error;
};

// A zero multiplicity was supplied where weights must be positive.
struct ZeroWeightError : Error {
  using Error::Error;
};

// A word whose variable indices do not form an interval [1..m] is not the
// code of any diagram.
struct NotACodeError : Error {
  using Error::Error;
};

// A relabelling map whose image is not the full target interval.
struct NotOntoError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

// Enumeration request above the configured size bound.
struct TooLargeError : Error {
  using Error::Error;
};

struct BoundError : Error {
  using Error::Error;
};

struct EmptyWordError : Error {
  using Error::Error;
};

// Operation restricted to words whose letters are single variables with
// exponent 1.
struct NotLetterWordError : Error {
  using Error::Error;
};

struct UnknownSuiteError : Error {
  using Error::Error;
};

}  // namespace ldiag
