#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colat {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown element, bad JSON shape, non-lattice order, ...
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; signals a bug rather than bad input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A search would exceed a configured cost guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace colat
