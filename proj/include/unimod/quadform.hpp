#pragma once

// Exact integer/rational linear algebra shared by the lattice, enumeration
// and theta modules. Nothing here touches floating point.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace unimod {

using Int = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Symmetric integer matrix: the Gram matrix of a lattice basis, or the Gram
// matrix S of a tuple of lattice vectors indexing a theta coefficient.
class GramMatrix {
 public:
  GramMatrix() = default;  // the 0x0 matrix

  // Throws NotSymmetric if the input is not square and symmetric.
  static GramMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static GramMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static GramMatrix from_matrix(const IntMatrix& m);
  static GramMatrix zero(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_even() const;
  IntMatrix as_matrix() const;

  // U * G * U^T, where the rows of U express a new basis in the old one.
  GramMatrix transformed(const IntMatrix& u) const;

  // Principal submatrix on the given (ordered) indices.
  GramMatrix principal(const std::vector<std::size_t>& indices) const;

  // Row-major "[[a,b],[b,c]]"; the empty matrix is "[]".
  std::string serialize() const;
  static GramMatrix parse(const std::string& text);

  bool operator==(const GramMatrix& rhs) const;
  std::strong_ordering operator<=>(const GramMatrix& rhs) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Int> data_;
};

// Exact LDL^T factorization G = lower * diag(diag) * lower^T with lower
// unitriangular.
struct RationalCholesky {
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> lower;

  // lower * diag * lower^T, entry by entry.
  std::vector<std::vector<Rational>> reconstruct() const;
};

// Determinant by Bareiss fraction-free elimination. Requires a square matrix.
Int determinant(const IntMatrix& m);

// Rank over Q by fraction-free elimination.
std::size_t exact_rank(const IntMatrix& m);

// Throws NotPositiveDefinite naming the first non-positive pivot.
RationalCholesky rational_cholesky(const GramMatrix& g);

bool is_positive_definite(const GramMatrix& g);
bool is_positive_semidefinite(const GramMatrix& g);

// Positive definite, determinant 1, even diagonal.
bool is_even_unimodular(const GramMatrix& g);

// Row-style Hermite normal form of the lattice spanned by the rows of
// `generators`; returns the nonzero rows (upper triangular, positive pivots,
// entries above each pivot reduced into [0, pivot)).
IntMatrix hermite_normal_form(const IntMatrix& generators);

}  // namespace unimod
