#pragma once

#include <stdexcept>
#include <string>

namespace netprice {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, non-finite values, out-of-range indices.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An instance that fails one of the model assumptions a solver relies on.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// A centrality vector whose defining inverse does not exist or is not
/// nonnegative.
class IllDefined : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Raised by the exhaustive routines (support enumeration, 2^n brute force).
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure, e.g. zero or several equilibrium supports.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// A file that cannot be opened, read or written.
class FileError : public Error {
 public:
  using Error::Error;
};

}  // namespace netprice
