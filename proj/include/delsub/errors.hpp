#pragma once

#include <stdexcept>
#include <string>

namespace delsub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad digits, out-of-range symbols, wrong alphabet size.
class ParseError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidScript : public Error {
 public:
  using Error::Error;
};

class UnsupportedAlphabet : public Error {
 public:
  using Error::Error;
};

/// A ball or enumeration would exceed the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The received word is not within the decoder's error model.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

/// A mathematical guarantee was observed to fail. Never caught internally.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace delsub
