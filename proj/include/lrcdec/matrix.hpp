#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrcdec/field.hpp"

namespace lrcdec::gf {

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<Elem> row(std::size_t i) const;
  std::vector<Elem> col(std::size_t j) const;
  std::vector<std::vector<Elem>> to_rows() const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
std::vector<Elem> multiply(const Field& F, const Matrix& a, const std::vector<Elem>& x);

struct Rref {
  Matrix reduced;                   // P * A in reduced row-echelon form
  Matrix transform;                 // the invertible P (only if requested)
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row-echelon form, pivoting on the first nonzero entry of each
// column scanned left to right.
Rref rref(const Field& F, const Matrix& a, bool with_transform = false);
std::size_t rank(const Field& F, const Matrix& a);

struct Solution {
  Matrix x;            // one solution of A X = B
  bool unique = true;  // A has full column rank
};
// Solves A X = B. Empty result when the system is inconsistent.
std::optional<Solution> solve(const Field& F, const Matrix& a, const Matrix& b);

// Rows form a basis of the right kernel {x : A x = 0}.
Matrix nullspace(const Field& F, const Matrix& a);

}  // namespace lrcdec::gf
