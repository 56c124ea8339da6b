#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo a prime.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace svt {

/// Working field: either the rationals or F_p for a prime p < 2^63.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }
  /// Accepts "p/q", "k", and "k mod p".
  static Scalar parse(std::string_view text, const Field& field);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// "p/q" (q omitted when 1) or "k mod p".
  std::string to_string() const;

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const;
  std::uint64_t residue() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

}  // namespace svt
