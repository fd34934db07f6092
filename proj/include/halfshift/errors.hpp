#pragma once

#include <stdexcept>
#include <string>

namespace halfshift {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside a documented parameter range (odd N, W out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// DPSS length above the configured maximum.
class SizeLimitError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// A computed quantity violated an invariant beyond rounding tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The truncated tail oracle did not converge before its horizon cap.
class HorizonExceededError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; the message carries the path and line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace halfshift
