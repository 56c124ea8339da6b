#include "svt/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "svt/errors.hpp"

namespace svt {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::unit(const Field& field, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(field, n, n);
  m(i, j) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return is_zero_vector(a_); }

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix size mismatch in product");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InputError("matrix-vector size mismatch");
  Vector r = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (!(a.a_[k] == b.a_[k])) return false;
  return true;
}

Matrix Matrix::pow(unsigned e) const {
  Matrix r = identity(field_, rows_);
  Matrix b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Echelon rref(const Matrix& in) {
  Matrix a = in;
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    nz.clear();
    for (std::size_t j = c; j < C; ++j) {
      if (a(r, j).is_zero()) continue;
      a(r, j) *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j : nz) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(in.field(), r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
  Echelon e = rref(a);
  const std::size_t C = a.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(a.field(), C);
    v[f] = Scalar::one(a.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve: row count mismatch");
  const std::size_t n = a.cols(), m = b.cols();
  Matrix aug(a.field(), a.rows(), n + m);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
  }
  Echelon e = rref(aug);
  Matrix x(a.field(), n, m);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < m; ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  auto x = solve(a, Matrix::from_columns(a.field(), {b}, b.size()));
  if (!x) return std::nullopt;
  return x->column(0);
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x || rank(a) != a.rows()) throw std::domain_error("singular matrix");
  return *x;
}

Scalar determinant(const Matrix& in) {
  if (in.rows() != in.cols()) throw InputError("determinant of a non-square matrix");
  Matrix a = in;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(a.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar::zero(a.field());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix left_inverse(const Matrix& a) {
  // Invert a square block of independent rows and place it in those columns.
  Echelon e = rref(a.transpose());
  if (e.pivots.size() != a.cols()) throw std::domain_error("left inverse of a rank-deficient matrix");
  const std::size_t k = a.cols();
  Matrix sub(a.field(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(e.pivots[i], j);
  Matrix inv = inverse(sub);
  Matrix l(a.field(), k, a.rows());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) l(i, e.pivots[j]) = inv(i, j);
  return l;
}

std::vector<Vector> canonical_span(const Field& field, const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  Echelon e = rref(Matrix::from_rows(field, vs, dim));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

}  // namespace svt
