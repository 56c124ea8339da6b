#pragma once

// Univariate polynomials over a working field, with root extraction.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "svt/field.hpp"

namespace svt {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Field& field) : field_(field) {}
  /// Coefficients lowest degree first; trailing zeros are stripped.
  UniPoly(const Field& field, std::vector<Scalar> coeffs);

  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(const Scalar& c, int degree);
  static UniPoly x(const Field& field) { return monomial(Scalar::one(field), 1); }
  /// x - root
  static UniPoly linear(const Scalar& root);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Scalar coeff(int i) const;
  Scalar leading() const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  UniPoly monic() const;
  UniPoly derivative() const;
  Scalar eval(const Scalar& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& s);
  UniPoly operator-() const;
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  UniPoly pow(unsigned e) const;
  /// Coefficient of t^k for k in [lo, hi), shifted down by lo.
  UniPoly slice(int lo, int hi) const;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtGcd {
  UniPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

/// base^e mod m.
UniPoly pow_mod(const UniPoly& base, const mpz_class& e, const UniPoly& m);

/// Product of the distinct irreducible factors of f, monic.
UniPoly squarefree_part(const UniPoly& f);

struct LinearSplit {
  std::vector<std::pair<Scalar, int>> roots;  // (root, multiplicity), sorted by to_string
  UniPoly residual;                           // monic, free of roots in the field
};

/// Extracts every root of f in the working field with multiplicity.
/// The product of (x - r)^m over roots times residual equals the monic f.
LinearSplit split_linear_factors(const UniPoly& f);

/// Complete factorization of a monic polynomial over F_p into monic irreducibles
/// with multiplicities, sorted by degree then coefficients.
std::vector<std::pair<UniPoly, int>> factor_fp(const UniPoly& f);

/// Seed for the randomized equal-degree splitting over F_p.
void set_factor_seed(std::uint64_t seed);
std::uint64_t factor_seed();
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed5eedULL;

}  // namespace svt
