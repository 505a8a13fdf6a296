#pragma once

#include <stdexcept>
#include <string>

namespace stonewb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A natural number left the checked 64-bit range.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// An exhaustive operation was asked to run above the configured ceiling.
class SizeError : public Error {
  public:
    using Error::Error;
};

/// Malformed or dangling input data (schema level).
class InputError : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside its precondition (non-distributive
/// source, non-strict map, intersecting ideal and filter, ...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Two routes that must agree on valid input disagreed.
class ConsistencyFault : public Error {
  public:
    using Error::Error;
};

}  // namespace stonewb
