#pragma once

// Tensors whose coefficients are polynomials in a parameter t.

#include <map>
#include <string>
#include <vector>

#include "svt/poly.hpp"
#include "svt/tensor.hpp"

namespace svt {

/// Matrix polynomial sum_r t^r coeffs[r].
struct MatrixPoly {
  std::vector<Matrix> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Matrix evaluate(const Scalar& t) const;
};

class PolyTensor {
 public:
  using Terms = std::map<Key, UniPoly, KeyOrder>;

  PolyTensor() = default;
  explicit PolyTensor(Format format) : format_(std::move(format)) {}
  /// t^shift * c * T.
  static PolyTensor from_tensor(const SVTensor& t, int shift = 0);

  const Format& format() const { return format_; }
  const Terms& terms() const { return terms_; }
  const Field& field() const { return format_.field(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const UniPoly& c);
  PolyTensor& operator+=(const PolyTensor& o);
  PolyTensor& operator-=(const PolyTensor& o);
  PolyTensor& operator*=(const UniPoly& c);
  friend PolyTensor operator+(PolyTensor a, const PolyTensor& b) { return a += b; }
  friend PolyTensor operator-(PolyTensor a, const PolyTensor& b) { return a -= b; }
  friend bool operator==(const PolyTensor& a, const PolyTensor& b) { return a.terms_ == b.terms_; }

  /// Coefficient of t^k.
  SVTensor coefficient(int k) const;
  SVTensor evaluate(const Scalar& t) const;
  /// Largest power of t dividing every coefficient (-1 for zero).
  int valuation() const;
  int degree() const;
  std::string to_string(const std::string& var = "t") const;

 private:
  Format format_;
  Terms terms_;
};

/// Substitutes x_i -> R_j(t) e_i in every slot j.
PolyTensor push_forward(const SVTensor& t, const std::vector<MatrixPoly>& r);

/// sum_{r < len} t^r M^r.
MatrixPoly geometric_series(const Matrix& m, int len);

}  // namespace svt
