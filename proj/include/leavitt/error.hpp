#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leavitt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different fields, alphabets or matrix sizes.
class MismatchError : public Error {
public:
  using Error::Error;
};

/// A mathematically undefined request: division by zero, a trace outside
/// its domain, a witness for a simple Lie algebra, out-of-range indices.
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

} // namespace leavitt
