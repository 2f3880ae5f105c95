#pragma once

#include <stdexcept>
#include <string>

namespace stretchkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (e.g. a.cols != b.rows).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A computation tried to combine ComplexFloat and GaussianRational values,
/// or an exact-only operation received approximate input.
class ScalarKindError : public Error {
 public:
  using Error::Error;
};

/// Points, maps and tensors do not live on the same index set.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// sigma does not map the index set into itself.
class PermutationDomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace stretchkit
