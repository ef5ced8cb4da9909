#ifndef NHPOLY_ERRORS_HPP
#define NHPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nhpoly {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or syntactic error in an equation string; `position` is a
// 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structural violation: non-monic input, support-condition failure,
// bad dimension, malformed data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Coefficient-field problems: division by zero, non-prime modulus,
// non-invertible n, mixed field configurations.
class FieldError : public Error {
 public:
  using Error::Error;
};

// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A "should never happen" condition: an internal invariant failed.
// The CLI maps this to exit code 1.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nhpoly

#endif
