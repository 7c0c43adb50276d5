#ifndef TAXICAB_ERRORS_HPP
#define TAXICAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace taxicab {

/// Base of every exception the kernel throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that collapses a construction (coincident points, zero direction,
/// collinear triangle).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (point off a circle, non-canonical
/// triangle, negative slope, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed rational or point literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace taxicab

#endif  // TAXICAB_ERRORS_HPP
