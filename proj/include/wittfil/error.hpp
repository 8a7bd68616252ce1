#pragma once

#include <stdexcept>
#include <string>

namespace wittfil {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient needed by the computation lies beyond a known precision window.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotAPthPower : public Error {
 public:
  using Error::Error;
};

class CharacteristicMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class UnsupportedResidueField : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class RankCapExceeded : public Error {
 public:
  using Error::Error;
};

class SearchSpaceExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidDecomposition : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

/// Parse failure with the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected = {})
      : Error(what + " at position " + std::to_string(position) +
              (expected.empty() ? std::string() : " (expected " + expected + ")")),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace wittfil
