#include "svt/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "svt/errors.hpp"

namespace svt {

namespace {

std::uint64_t g_factor_seed = kDefaultFactorSeed;

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return a.rational() < b.rational();
  return a.residue() < b.residue();
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    Scalar x = a.coeff(i), y = b.coeff(i);
    if (!(x == y)) return scalar_less(x, y);
  }
  return false;
}

// Over F_p, g(x^p) = (sum c_{ip} x^i)^p.
UniPoly pth_root(const UniPoly& f) {
  int p = static_cast<int>(f.field().characteristic());
  std::vector<Scalar> out;
  for (int i = 0; i * p <= f.degree(); ++i) out.push_back(f.coeff(i * p));
  return UniPoly(f.field(), std::move(out));
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly c = gcd(f, f.derivative());
  UniPoly w = f.monic() / c;
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    int p = static_cast<int>(f.field().characteristic());
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

UniPoly random_poly(const Field& field, int below_degree, std::mt19937_64& rng) {
  std::uint64_t p = field.characteristic();
  std::vector<Scalar> c;
  for (int i = 0; i < below_degree; ++i) c.emplace_back(field, mpz_class(static_cast<unsigned long>(rng() % p)));
  return UniPoly(field, std::move(c));
}

void equal_degree_split(const UniPoly& f, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& field = f.field();
  std::uint64_t p = field.characteristic();
  for (;;) {
    UniPoly a = random_poly(field, f.degree(), rng);
    if (a.degree() < 1) continue;
    UniPoly b(field);
    if (p == 2) {
      UniPoly t = a % f;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = pow_mod(a, e, f) - UniPoly::constant(Scalar::one(field));
    }
    UniPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<UniPoly> factor_squarefree_fp(UniPoly g, std::mt19937_64& rng) {
  std::vector<UniPoly> out;
  const Field& field = g.field();
  mpz_class p(static_cast<unsigned long>(field.characteristic()));
  UniPoly x = UniPoly::x(field);
  UniPoly h = x % g;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = pow_mod(h, p, g);
    UniPoly fd = gcd(g, h - x);
    if (fd.degree() > 0) {
      equal_degree_split(fd, d, rng, out);
      g = g / fd;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.push_back(g.monic());
  return out;
}

mpz_class lcm_of_denominators(const UniPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  return l;
}

mpz_class eval_mod(const std::vector<mpz_class>& h, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    acc = acc * x + *it;
    if (m != 0) mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// Integer roots of a monic squarefree integer polynomial.
std::vector<mpz_class> integer_roots(const std::vector<mpz_class>& h) {
  int n = static_cast<int>(h.size()) - 1;
  mpz_class bound = 0;
  for (int i = 0; i < n; ++i) {
    mpz_class a = abs(h[i]);
    if (a > bound) bound = a;
  }
  bound += 1;

  std::vector<mpz_class> dh;
  for (int i = 1; i <= n; ++i) dh.push_back(h[i] * i);

  unsigned long p = 1009;
  std::vector<Scalar> roots_mod;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    Field fp = Field::prime(p);
    std::vector<Scalar> c;
    for (const auto& a : h) c.emplace_back(fp, a);
    UniPoly hp(fp, c);
    if (gcd(hp, hp.derivative()).degree() > 0) continue;
    for (const auto& [r, m] : split_linear_factors(hp).roots) roots_mod.push_back(r);
    break;
  }

  std::vector<mpz_class> out;
  for (const auto& r0 : roots_mod) {
    mpz_class r(static_cast<unsigned long>(r0.residue()));
    mpz_class m(p);
    while (m <= 2 * bound) {
      mpz_class m2 = m * m;
      mpz_class num = eval_mod(h, r, m2);
      mpz_class den = eval_mod(dh, r, m2);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m2.get_mpz_t());
      r = r - num * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m2.get_mpz_t());
      m = m2;
    }
    if (2 * r > m) r -= m;
    if (eval_mod(h, r, 0) == 0) out.push_back(r);
  }
  return out;
}

std::vector<Scalar> rational_roots(const UniPoly& g) {
  // g squarefree, g(0) != 0, over Q.
  const Field& q = g.field();
  mpz_class l = lcm_of_denominators(g);
  std::vector<mpz_class> G;
  mpz_class content = 0;
  for (const auto& c : g.coeffs()) {
    mpq_class v = c.rational() * l;
    G.push_back(v.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), G.back().get_mpz_t());
  }
  for (auto& a : G) a /= content;
  int n = static_cast<int>(G.size()) - 1;
  if (G[n] < 0)
    for (auto& a : G) a = -a;
  mpz_class an = G[n];

  // h(y) = an^(n-1) G(y / an), monic with integer coefficients.
  std::vector<mpz_class> h(n + 1);
  mpz_class pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    h[i] = G[i] * pw;
    pw *= an;
  }
  h[n] = 1;

  std::vector<Scalar> out;
  for (const auto& r : integer_roots(h)) out.emplace_back(q, mpq_class(r, an));
  return out;
}

}  // namespace

void set_factor_seed(std::uint64_t seed) { g_factor_seed = seed; }
std::uint64_t factor_seed() { return g_factor_seed; }

UniPoly::UniPoly(const Field& field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == field_)) throw InputError("polynomial coefficient from a different field");
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
  v[degree] = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::linear(const Scalar& root) {
  return UniPoly(root.field(), {-root, Scalar::one(root.field())});
}

Scalar UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar::zero(field_);
  return c_[i];
}

Scalar UniPoly::leading() const { return is_zero() ? Scalar::zero(field_) : c_.back(); }

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return UniPoly(field_, std::move(d));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_) || a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  UniPoly r = *this;
  if (r.degree() < d.degree()) return {UniPoly(field_), r};
  std::vector<Scalar> q(r.degree() - d.degree() + 1, Scalar::zero(field_));
  Scalar inv = d.leading().inverse();
  for (int k = r.degree() - d.degree(); k >= 0; --k) {
    Scalar c = r.c_[k + d.degree()] * inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= d.degree(); ++i) r.c_[k + i] -= c * d.c_[i];
  }
  r.trim();
  return {UniPoly(field_, std::move(q)), r};
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = constant(Scalar::one(field_));
  UniPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::slice(int lo, int hi) const {
  std::vector<Scalar> v;
  for (int i = lo; i < hi && i <= degree(); ++i) v.push_back(coeff(i));
  return UniPoly(field_, std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool neg = c.is_rational() && sgn(c.rational()) < 0;
    if (neg) s = (-c).to_string();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool unit = s == "1" || (!c.is_rational() && c.is_one());
    if (i == 0) {
      os << s;
    } else {
      if (!unit) os << (c.is_rational() ? s : "(" + s + ")") << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(Scalar::one(f)), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly pow_mod(const UniPoly& base, const mpz_class& e, const UniPoly& m) {
  UniPoly r = UniPoly::constant(Scalar::one(base.field())) % m;
  UniPoly b = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw InputError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return UniPoly::constant(Scalar::one(f.field()));
  if (f.field().is_rational()) return (f / gcd(f, f.derivative())).monic();
  UniPoly r = UniPoly::constant(Scalar::one(f.field()));
  for (const auto& [g, m] : squarefree_decomposition(f)) r *= g;
  return r.monic();
}

std::vector<std::pair<UniPoly, int>> factor_fp(const UniPoly& f) {
  if (f.is_zero()) throw InputError("factorization of the zero polynomial");
  if (f.field().is_rational()) throw InputError("factor_fp requires a prime field");
  std::mt19937_64 rng(g_factor_seed);
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [g, m] : squarefree_decomposition(f.monic()))
    for (auto& h : factor_squarefree_fp(g, rng)) out.emplace_back(std::move(h), m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

LinearSplit split_linear_factors(const UniPoly& f) {
  if (f.is_zero()) throw InputError("root extraction from the zero polynomial");
  const Field& field = f.field();
  LinearSplit out;
  UniPoly rest = f.monic();
  if (!field.is_rational()) {
    UniPoly residual = UniPoly::constant(Scalar::one(field));
    for (const auto& [g, m] : factor_fp(rest)) {
      if (g.degree() == 1) out.roots.emplace_back(-g.coeff(0), m);
      else residual *= g.pow(static_cast<unsigned>(m));
    }
    out.residual = residual;
  } else {
    std::vector<Scalar> candidates;
    int zero_mult = 0;
    while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
      rest = rest / UniPoly::x(field);
      ++zero_mult;
    }
    if (zero_mult) out.roots.emplace_back(Scalar::zero(field), zero_mult);
    if (rest.degree() > 0) candidates = rational_roots(squarefree_part(rest));
    for (const auto& r : candidates) {
      UniPoly lin = UniPoly::linear(r);
      int m = 0;
      for (;;) {
        auto [q, rem] = rest.divmod(lin);
        if (!rem.is_zero()) break;
        rest = q;
        ++m;
      }
      if (m) out.roots.emplace_back(r, m);
    }
    out.residual = rest.monic();
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return scalar_less(a.first, b.first); });
  return out;
}

}  // namespace svt
