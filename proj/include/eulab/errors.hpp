#pragma once

#include <stdexcept>
#include <string>

namespace eulab {

/// Base class of every error raised by the library. The CLI maps the
/// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or table request exceeded one of the size guards.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidParamError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownIdentityError : public Error {
 public:
  using Error::Error;
};

// Series arithmetic.
class NonInvertibleConstantTermError : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTermError : public Error {
 public:
  using Error::Error;
};

// Basis expansions.
class NotPalindromicError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class NotExpandableError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulab
