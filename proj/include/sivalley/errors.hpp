#ifndef SIVALLEY_ERRORS_HPP
#define SIVALLEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sivalley {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Eigensolver failure, residual check failure, non-finite results.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sivalley

#endif  // SIVALLEY_ERRORS_HPP
