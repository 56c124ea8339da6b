#pragma once

// Segre-Veronese tensors in the plain monomial basis and the slot actions.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svt/field.hpp"
#include "svt/matrix.hpp"

namespace svt {

struct Factor {
  int dim = 1;
  int degree = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Shape S^{d_1}V_1 x ... x S^{d_e}V_e over a field.
class Format {
 public:
  Format() = default;
  /// Degrees may be zero for derived formats; over F_p with some degree >= 2
  /// the characteristic must exceed the total degree.
  Format(const Field& field, std::vector<Factor> factors, bool dual = false);

  const Field& field() const { return field_; }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(int j) const { return factors_[j]; }
  int e() const { return static_cast<int>(factors_.size()); }
  int dim(int j) const { return factors_[j].dim; }
  int degree(int j) const { return factors_[j].degree; }
  int offset(int j) const { return offsets_[j]; }
  int total_vars() const { return offsets_.back(); }
  int total_degree() const;
  bool dual() const { return dual_; }

  Format with_degrees(const std::vector<int>& degrees) const;
  Format with_dims(const std::vector<int>& dims) const;
  Format with_degree(int j, int degree) const;
  Format as_dual(bool dual) const;
  /// Every factor has degree at least one.
  void require_positive_degrees() const;

  friend bool operator==(const Format& a, const Format& b) {
    return a.field_ == b.field_ && a.factors_ == b.factors_ && a.dual_ == b.dual_;
  }

 private:
  Field field_;
  std::vector<Factor> factors_;
  std::vector<int> offsets_{0};
  bool dual_ = false;
};

/// Flat exponent vector: the exponents of all factors, concatenated.
using Key = std::vector<int>;
/// Descending lexicographic order: graded-lex inside each factor, factors in order.
using KeyOrder = std::greater<Key>;

/// Exponent vectors of length n and total degree d, in KeyOrder.
std::vector<std::vector<int>> monomials_of(int n, int d);
/// All keys of a format, in KeyOrder.
std::vector<Key> all_keys(const Format& f);
int slot_degree(const Format& f, const Key& k, int j);

class SVTensor {
 public:
  using Terms = std::map<Key, Scalar, KeyOrder>;

  SVTensor() = default;
  explicit SVTensor(Format format) : format_(std::move(format)) {}

  const Format& format() const { return format_; }
  const Field& field() const { return format_.field(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c to the coefficient at k; checks the key against the format.
  void add(const Key& k, const Scalar& c);
  void add_unchecked(const Key& k, const Scalar& c);
  Scalar coeff(const Key& k) const;

  SVTensor& operator+=(const SVTensor& o);
  SVTensor& operator-=(const SVTensor& o);
  SVTensor& operator*=(const Scalar& s);
  friend SVTensor operator+(SVTensor a, const SVTensor& b) { return a += b; }
  friend SVTensor operator-(SVTensor a, const SVTensor& b) { return a -= b; }
  friend SVTensor operator*(SVTensor a, const Scalar& s) { return a *= s; }
  friend SVTensor operator*(const Scalar& s, SVTensor a) { return a *= s; }
  SVTensor operator-() const { return *this * -Scalar::one(field()); }
  friend bool operator==(const SVTensor& a, const SVTensor& b);

  /// Coefficients over all_keys(format()).
  Vector dense() const;
  static SVTensor from_dense(const Format& f, const Vector& v);

  /// e.g. "3*a1*b2*c1 - 1/2*a2^2*b1*c2"; single-factor tensors use x1, x2, ...
  std::string to_string() const;

 private:
  void check_key(const Key& k) const;
  Format format_;
  Terms terms_;
};

/// Variable name used by to_string for variable i of factor j.
std::string variable_name(const Format& f, int j, int i);

/// Parses the to_string notation, e.g. "x1^2*x2 - 3/2*x3^3" or "a1*b2*c1 + a2*b1*c2".
/// A term may omit the coefficient; every term must have the format's degrees.
SVTensor parse_expression(const Format& f, std::string_view text);

/// Slot j split into V_j (the leg) tensor S^{d_j - 1}V_j.
class MixedTensor {
 public:
  struct MKey {
    int leg;
    Key rest;  // slot j has degree d_j - 1
    friend bool operator<(const MKey& a, const MKey& b) {
      if (a.leg != b.leg) return a.leg < b.leg;
      return KeyOrder()(a.rest, b.rest);
    }
    friend bool operator==(const MKey&, const MKey&) = default;
  };
  using Terms = std::map<MKey, Scalar>;

  MixedTensor(Format format, int slot) : format_(std::move(format)), slot_(slot) {}

  const Format& format() const { return format_; }
  int slot() const { return slot_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(int leg, const Key& rest, const Scalar& c);
  Scalar coeff(int leg, const Key& rest) const;

  MixedTensor& operator-=(const MixedTensor& o);
  friend bool operator==(const MixedTensor& a, const MixedTensor& b);
  std::string to_string() const;

 private:
  Format format_;
  int slot_;
  Terms terms_;
};

struct EndoTuple {
  std::vector<Matrix> mats;

  static EndoTuple identity(const Format& f);
  static EndoTuple zero(const Format& f);
  int size() const { return static_cast<int>(mats.size()); }
  bool is_zero() const;

  EndoTuple& operator+=(const EndoTuple& o);
  EndoTuple& operator-=(const EndoTuple& o);
  EndoTuple& operator*=(const Scalar& s);
  friend EndoTuple operator+(EndoTuple a, const EndoTuple& b) { return a += b; }
  friend EndoTuple operator-(EndoTuple a, const EndoTuple& b) { return a -= b; }
  friend EndoTuple operator*(EndoTuple a, const Scalar& s) { return a *= s; }
  friend EndoTuple operator*(const Scalar& s, EndoTuple a) { return a *= s; }
  /// Componentwise matrix product.
  friend EndoTuple operator*(const EndoTuple& a, const EndoTuple& b);
  friend bool operator==(const EndoTuple&, const EndoTuple&);

  /// All entries, slot by slot, each matrix row-major.
  Vector flatten() const;
  static EndoTuple unflatten(const Format& f, const Vector& v);
};

/// X contracted into slot j: sum X_{ki} x_k d/dx_i applied to the j-th factor.
SVTensor contract_op(const SVTensor& t, int j, const Matrix& x);
/// (1/d_j) sum_i x_i (leg) tensor d/dx_i T.
MixedTensor desymmetrize(const SVTensor& t, int j);
/// X applied to the leg of desymmetrize(t, j).
MixedTensor mode_apply(const SVTensor& t, int j, const Matrix& x);
/// Multiplies the leg back into slot j.
SVTensor symmetrize(const MixedTensor& m);
/// The tensor whose desymmetrization is m, if any.
std::optional<SVTensor> is_symmetric_image(const MixedTensor& m);
/// d_j desymmetrize(f, j) == sum_i x_i (leg) (alpha_i applied to f).
bool euler_identity_check(const SVTensor& f, int j);

/// Partial derivatives by the dual monomial r (flat exponents).
SVTensor apolar_act(const SVTensor& t, const Key& r);
/// Action of a dual-ring element on t.
SVTensor apolar_act(const SVTensor& t, const SVTensor& dual);
/// Product of two dual-ring elements.
SVTensor dual_product(const SVTensor& a, const SVTensor& b);

/// Rows: alpha_i applied to slot j, for i < n_j, as dense vectors.
Matrix flattening(const SVTensor& t, int j);

struct Conciseness {
  std::vector<int> ranks;
  bool concise = false;
  std::vector<Matrix> bases;  // n_j x r_j, columns span the essential subspace
  SVTensor reduced;           // t in the coordinates of those bases
};
/// Throws ZeroTensor on the zero tensor.
Conciseness conciseness(const SVTensor& t);
bool is_concise(const SVTensor& t);

/// Linear substitution x_i -> A_j e_i in every slot j (A_j is m_j x n_j).
SVTensor push_forward(const SVTensor& t, const std::vector<Matrix>& a);
SVTensor push_forward(const SVTensor& t, int j, const Matrix& a);

/// Product over slots j of the d_j linear forms forms[j] (coordinate vectors).
SVTensor product_of_forms(const Format& f, const std::vector<std::vector<Vector>>& forms);

}  // namespace svt
