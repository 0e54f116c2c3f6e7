#pragma once

#include <stdexcept>
#include <string>

namespace charprod {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed group description or zoo label.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Input exceeds a configured size limit.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A computed object violates an algebraic invariant it must satisfy.
/// Seeing one of these means a bug (or a corrupted input table), never a
/// legitimate input state.
class InvariantError : public Error {
public:
  using Error::Error;
};

} // namespace charprod
