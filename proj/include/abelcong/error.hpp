#pragma once

#include <stdexcept>
#include <string>

namespace abelcong {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `path` names the offending key when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::string path = {})
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings (different conductor, different p, ...).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// p divides the conductor of the cyclotomic field.
class RamifiedPrime : public Error {
 public:
  using Error::Error;
};

/// An element has a coordinate with negative p-adic valuation.
class NonIntegral : public Error {
 public:
  using Error::Error;
};

/// The constant coefficient of x*eta is not rational.
class NonRationalResidue : public Error {
 public:
  using Error::Error;
};

/// A sequence term was requested outside the supplied data.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace abelcong
