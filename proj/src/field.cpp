#include "svt/field.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "svt/errors.hpp"

namespace svt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 reduce(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_class mp;
  mpz_import(mp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mp.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw InputError("empty scalar");
  std::string t = s;
  if (t[0] == '+') t.erase(0, 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0);
    if (!ok) throw InputError("malformed scalar '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw InputError("malformed scalar '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p >= (1ULL << 63)) throw InputError("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw InputError("modulus is not prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  std::string t = trim(text);
  if (t == "Q" || t == "QQ") return rationals();
  if (t.rfind("Fp:", 0) == 0 || t.rfind("GF:", 0) == 0) {
    std::string num = t.substr(3);
    u64 p = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
      throw InputError("malformed field '" + t + "'");
    return prime(p);
  }
  throw InputError("unknown field '" + t + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    v_ = Residue{reduce(mpz_class(value), field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(const Field& field, const mpz_class& value) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    v_ = Residue{reduce(value, field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    v_ = q;
    return;
  }
  u64 p = field.characteristic();
  u64 den = reduce(value.get_den(), p);
  if (den == 0) throw InputError("denominator divisible by the characteristic");
  u64 num = reduce(value.get_num(), p);
  v_ = Residue{mulmod(num, powmod(den, p - 2, p), p), p};
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
  std::string t = trim(text);
  auto pos = t.find("mod");
  if (pos != std::string::npos) {
    std::string lhs = trim(std::string_view(t).substr(0, pos));
    std::string rhs = trim(std::string_view(t).substr(pos + 3));
    u64 p = 0;
    auto [ptr, ec] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), p);
    if (ec != std::errc() || ptr != rhs.data() + rhs.size())
      throw InputError("malformed residue '" + t + "'");
    if (field.is_rational() || field.characteristic() != p)
      throw InputError("residue '" + t + "' does not belong to field " + field.to_string());
    return Scalar(field, parse_rational(lhs));
  }
  return Scalar(field, parse_rational(t));
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<Residue>(v_).p);
}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(std::get<mpq_class>(v_)) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return std::get<mpq_class>(v_) == 1;
  return std::get<Residue>(v_).value == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  bool ra = is_rational(), rb = o.is_rational();
  if (ra != rb || (!ra && std::get<Residue>(v_).p != std::get<Residue>(o.v_).p))
    throw InputError("arithmetic between scalars of different fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (is_rational()) {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  } else {
    auto& a = std::get<Residue>(v_);
    u64 b = std::get<Residue>(o.v_).value;
    a.value = a.value >= a.p - b ? a.value - (a.p - b) : a.value + b;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (is_rational()) {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  } else {
    auto& a = std::get<Residue>(v_);
    u64 b = std::get<Residue>(o.v_).value;
    a.value = a.value >= b ? a.value - b : a.value + (a.p - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (is_rational()) {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  } else {
    auto& a = std::get<Residue>(v_);
    a.value = mulmod(a.value, std::get<Residue>(o.v_).value, a.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (is_rational()) {
    std::get<mpq_class>(r.v_) = -std::get<mpq_class>(v_);
  } else {
    auto& a = std::get<Residue>(r.v_);
    if (a.value) a.value = a.p - a.value;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.is_rational()) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  return std::get<Scalar::Residue>(a.v_).value == std::get<Scalar::Residue>(b.v_).value;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (is_rational()) {
    std::get<mpq_class>(r.v_) = 1 / std::get<mpq_class>(v_);
  } else {
    auto& a = std::get<Residue>(r.v_);
    a.value = powmod(a.value, a.p - 2, a.p);
  }
  return r;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : exponent;
  Scalar r = one(field());
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string Scalar::to_string() const {
  if (is_rational()) return std::get<mpq_class>(v_).get_str();
  const auto& a = std::get<Residue>(v_);
  return std::to_string(a.value) + " mod " + std::to_string(a.p);
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw InputError("scalar is not rational");
  return std::get<mpq_class>(v_);
}

u64 Scalar::residue() const {
  if (is_rational()) throw InputError("scalar is not a residue");
  return std::get<Residue>(v_).value;
}

}  // namespace svt
