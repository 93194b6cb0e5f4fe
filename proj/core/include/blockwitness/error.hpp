#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockwitness {

// Every failure raised by the library derives from Error. Subclasses are
// split by who is at fault: bad caller input (InputError), malformed table
// files (ParseError), or a broken mathematical invariant (InternalError),
// which always indicates a bug in this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

// Division of factored integers where the divisor does not divide.
class NotDivisible : public InternalError {
 public:
  using InternalError::InternalError;
};

class NotPrime : public InputError {
 public:
  using InputError::InputError;
};

class PrimeExceedsN : public InputError {
 public:
  using InputError::InputError;
};

class InvalidPartition : public InputError {
 public:
  using InputError::InputError;
};

class NonMonotoneSpec : public InputError {
 public:
  using InputError::InputError;
};

class LengthTooSmall : public InputError {
 public:
  using InputError::InputError;
};

class UndefinedQuantity : public InputError {
 public:
  using InputError::InputError;
};

class SpecSumMismatch : public InputError {
 public:
  using InputError::InputError;
};

// No candidate of the case tree verified, or the routing reached a state the
// proof rules out. Must never happen.
class CaseTreeFalsified : public InternalError {
 public:
  using InternalError::InternalError;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string token, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what +
              (token.empty() ? std::string() : " (at '" + token + "')")),
        line_(line),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

}  // namespace blockwitness
