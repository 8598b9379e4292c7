#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace unimod {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes, so new errors should derive from the closest existing category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- quadform-core --------------------------------------------------------

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(std::size_t pivot)
      : Error("matrix is not positive definite (pivot " + std::to_string(pivot) + ")"),
        pivot_(pivot) {}
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

// --- lattice-catalog ------------------------------------------------------

// Raised when a declared lattice fails one of its invariants.
class LatticeInvariantError : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public LatticeInvariantError {
 public:
  using LatticeInvariantError::LatticeInvariantError;
};

class NotEven : public LatticeInvariantError {
 public:
  using LatticeInvariantError::LatticeInvariantError;
};

class NotUnimodular : public LatticeInvariantError {
 public:
  using LatticeInvariantError::LatticeInvariantError;
};

class RootCountMismatch : public LatticeInvariantError {
 public:
  using LatticeInvariantError::LatticeInvariantError;
};

class InvalidComponent : public Error {
 public:
  using Error::Error;
};

class CatalogFormatError : public Error {
 public:
  CatalogFormatError(std::size_t line, const std::string& what)
      : Error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownName : public Error {
 public:
  UnknownName(const std::string& name, std::vector<std::string> valid);
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& valid_names() const noexcept { return valid_; }

 private:
  std::string name_;
  std::vector<std::string> valid_;
};

// --- enum-engine ----------------------------------------------------------

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

// --- arthur-engine --------------------------------------------------------

class UnsupportedArgument : public Error {
 public:
  using Error::Error;
};

class IndexNotInI0 : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// --- param-parser ---------------------------------------------------------

class ParseError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : ParseError("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class AmbiguousLabel : public ParseError {
 public:
  AmbiguousLabel(int weight, int dim)
      : ParseError("label D" + std::to_string(weight) + " is ambiguous: dim S_" +
                   std::to_string(weight) + " = " + std::to_string(dim) +
                   ", write D" + std::to_string(weight) + ".<index>"),
        weight_(weight),
        dim_(dim) {}
  int weight() const noexcept { return weight_; }
  int dim() const noexcept { return dim_; }

 private:
  int weight_;
  int dim_;
};

class BadIndex : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace unimod
