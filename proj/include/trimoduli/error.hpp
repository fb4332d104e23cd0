#pragma once

#include <stdexcept>
#include <string>

namespace trimoduli {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument violated a documented precondition or runtime guard.
class GuardError : public Error {
public:
  using Error::Error;
};

/// A floating-point construction failed its own post-condition check.
class PrecisionError : public Error {
public:
  using Error::Error;
};

/// An internal counting identity was violated; always a bug.
class EnumerationError : public Error {
public:
  using Error::Error;
};

} // namespace trimoduli
