#pragma once

#include <stdexcept>
#include <string>

namespace arrgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad forms, duplicate hyperplanes, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Indicates a bug or an input that is not
/// what it claims to be (e.g. a map that is not a symmetry).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrgr
