#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uval {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basis index (k, q) or (k, r) outside its admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Operands living in different ambient dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation (odd degree for iota,
/// multi-term divisor, inhomogeneous input where a single degree is needed).
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The sign of a Laurent polynomial in pi could not be separated from zero
/// with the finest available rational enclosure of pi.
class UndecidableSign : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace uval
