#pragma once

// Dense exact matrices and the linear algebra every solver relies on.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "svt/field.hpp"

namespace svt {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
bool is_zero_vector(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Elementary matrix with a single 1 at (i, j).
  static Matrix unit(const Field& field, std::size_t n, std::size_t i, std::size_t j);
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const Field& field, const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_ints(const Field& field, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix pow(unsigned e) const;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form: first nonzero column pivots, pivots scaled to 1.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis of {v : A v = 0}, one vector per free column with that entry 1.
std::vector<Vector> kernel_basis(const Matrix& a);
/// Some X with A X = B (free variables set to zero), or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& a);
Scalar determinant(const Matrix& a);
/// L with L A = I for A of full column rank; throws otherwise.
Matrix left_inverse(const Matrix& a);
/// Canonical basis (rref rows) of the span of the given vectors.
std::vector<Vector> canonical_span(const Field& field, const std::vector<Vector>& vs, std::size_t dim);

}  // namespace svt
