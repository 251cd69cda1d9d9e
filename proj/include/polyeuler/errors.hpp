#pragma once

#include <stdexcept>
#include <string>

namespace polyeuler {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, index vectors).
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Series division by a series whose constant term is zero.
class DivisionByNonUnit : public Error {
 public:
  using Error::Error;
};

/// Shifted division whose operands do not vanish to the requested order.
class InsufficientVanishing : public Error {
 public:
  using Error::Error;
};

/// Composition with an inner series that has a nonzero constant term.
class NonNilpotentInner : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration beyond its guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Parameter choice for which ln a + ln b vanishes.
class DegenerateParams : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

}  // namespace polyeuler
