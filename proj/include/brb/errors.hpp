#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different target algebras (Laurent vs. free commutative).
class BasisMismatch : public Error {
 public:
  using Error::Error;
};

// Input exceeds the truncation degree of a Hopf algebra or series.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Two maps or elements built over different Hopf algebra instances.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " (at column " + std::to_string(column + 1) + ")"), column_(column) {}

  /// Zero-based offset into the parsed text.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace brb
