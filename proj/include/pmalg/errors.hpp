#pragma once

#include <stdexcept>
#include <string>

namespace pmalg {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally malformed input: dangling indices, non-function maps, cyclic
// cover relations, unparseable documents.  Distinct from axiom violations,
// which are reported through ValidationReport.
struct MalformedError : Error {
  using Error::Error;
};

// A precondition on the mathematical domain failed (input is not a valid
// algebra, algebra is outside the required variety, descriptor out of range).
struct DomainError : Error {
  using Error::Error;
};

// A configurable resource cap was exceeded.
struct CapError : Error {
  using Error::Error;
};

// DSL syntax error; offset is the byte position in the input string.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

}  // namespace pmalg
