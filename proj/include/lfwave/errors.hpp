#pragma once

#include <stdexcept>
#include <string>

namespace lfw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different fields, or windows that do not fit together.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A field was constructed without a usable reduction polynomial.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A shift or lookup reaches outside the levels a table stores.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Scaling mask with m(identity) != 1.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A scaling-mask row that cannot seed a completion matrix.
class InvalidMaskError : public Error {
 public:
  using Error::Error;
};

class DependentRowsError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Messages carry the 1-based line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lfw
