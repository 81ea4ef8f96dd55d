/* Exact dense linear algebra over a prime field GF(p).
 *
 * Vectors are columns throughout; composition of linear maps corresponds to
 * matrix product in the same order, g after f  <->  G * F. */
#pragma once
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace gor {

class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : std::uint32_t(a + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t(std::uint64_t(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

  // Reduces an arbitrary signed value into [0, p).
  std::uint32_t reduce(long long v) const;

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t p_;
};

class Matrix {
 public:
  Matrix() : field_(2), rows_(0), cols_(0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f,
                          const std::vector<std::vector<std::uint32_t>>& rows);
  // Columns given as vectors of length `rows`; the column count is cols.size().
  static Matrix from_columns(Field f, std::size_t rows,
                             const std::vector<std::vector<std::uint32_t>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  std::uint32_t& operator()(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }

  std::vector<std::uint32_t> column(std::size_t j) const;

  bool is_zero() const;
  bool operator==(const Matrix&) const = default;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

Matrix mul(const Matrix& a, const Matrix& b);
std::vector<std::uint32_t> mul_vec(const Matrix& a,
                                   const std::vector<std::uint32_t>& v);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(std::uint32_t c, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(Field f, const std::vector<Matrix>& parts);

// Reduced row echelon form; pivot column indices are appended to *pivots.
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& a);

// Basis of {x : Ax = 0} as the columns of an a.cols() x nullity matrix.
// nullity = cols - rank always.
Matrix nullspace_basis(const Matrix& a);

// A basis of the column space: the pivot columns of a, kept in order.
Matrix column_space_basis(const Matrix& a);

// Square matrices only; the 0x0 matrix is invertible.
bool is_invertible(const Matrix& a);
Matrix inverse(const Matrix& a);

// Any solution X of A X = B, or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/* Extension of a full-column-rank B (n x r) to a basis of k^n by standard
 * basis vectors: complement D (n x (n-r)) and quotient Q ((n-r) x n) with
 * Q B = 0 and Q D = identity, so Q presents k^n / im B. */
struct BasisExtension {
  Matrix complement;
  Matrix quotient;
};
BasisExtension extend_to_basis(const Matrix& b);

}  // namespace gor
