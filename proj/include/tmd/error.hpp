#pragma once

#include <stdexcept>

namespace tmd {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range inputs: bad vertex ids, parse failures, ...
struct InvalidInput : Error {
  using Error::Error;
};

// An operation was invoked outside its stated preconditions.
struct PreconditionError : Error {
  using Error::Error;
};

// A size guard protecting an exhaustive search was exceeded.
struct GuardError : Error {
  using Error::Error;
};

}  // namespace tmd
