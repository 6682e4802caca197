#pragma once

#include <stdexcept>
#include <string>

namespace gm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or file input (cycle strings, instance files, specs).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Operands of different degree, or a point outside [n].
class DomainError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A desk-scale enumeration cap was exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

} // namespace gm
