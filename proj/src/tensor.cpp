#include "svt/tensor.hpp"

#include <cctype>
#include <sstream>

#include "svt/errors.hpp"
#include "svt/expand.hpp"

namespace svt {

Format::Format(const Field& field, std::vector<Factor> factors, bool dual)
    : field_(field), factors_(std::move(factors)), dual_(dual) {
  if (factors_.empty()) throw InputError("format needs at least one factor");
  offsets_.assign(1, 0);
  bool nonlinear = false;
  for (const auto& f : factors_) {
    if (f.dim < 1) throw InputError("factor dimension must be at least 1");
    if (f.degree < 0) throw InputError("factor degree must be nonnegative");
    offsets_.push_back(offsets_.back() + f.dim);
    nonlinear = nonlinear || f.degree >= 2;
  }
  if (!field_.is_rational() && nonlinear &&
      field_.characteristic() <= static_cast<std::uint64_t>(total_degree()))
    throw CharacteristicTooSmall("characteristic " + std::to_string(field_.characteristic()) +
                                 " must exceed the total degree " + std::to_string(total_degree()));
}

int Format::total_degree() const {
  int s = 0;
  for (const auto& f : factors_) s += f.degree;
  return s;
}

Format Format::with_degrees(const std::vector<int>& degrees) const {
  auto fs = factors_;
  for (std::size_t j = 0; j < fs.size(); ++j) fs[j].degree = degrees.at(j);
  return Format(field_, fs, dual_);
}

Format Format::with_dims(const std::vector<int>& dims) const {
  auto fs = factors_;
  for (std::size_t j = 0; j < fs.size(); ++j) fs[j].dim = dims.at(j);
  return Format(field_, fs, dual_);
}

Format Format::with_degree(int j, int degree) const {
  auto fs = factors_;
  fs.at(j).degree = degree;
  return Format(field_, fs, dual_);
}

Format Format::as_dual(bool dual) const { return Format(field_, factors_, dual); }

void Format::require_positive_degrees() const {
  for (const auto& f : factors_)
    if (f.degree < 1) throw InputError("every factor degree must be at least 1");
}

std::vector<std::vector<int>> monomials_of(int n, int d) {
  std::vector<std::vector<int>> out;
  if (n <= 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Key> all_keys(const Format& f) {
  std::vector<Key> out{Key{}};
  for (int j = 0; j < f.e(); ++j) {
    auto ms = monomials_of(f.dim(j), f.degree(j));
    std::vector<Key> next;
    next.reserve(out.size() * ms.size());
    for (const auto& k : out)
      for (const auto& m : ms) {
        Key nk = k;
        nk.insert(nk.end(), m.begin(), m.end());
        next.push_back(std::move(nk));
      }
    out = std::move(next);
  }
  return out;
}

int slot_degree(const Format& f, const Key& k, int j) {
  int s = 0;
  for (int i = 0; i < f.dim(j); ++i) s += k[f.offset(j) + i];
  return s;
}

void SVTensor::check_key(const Key& k) const {
  if (static_cast<int>(k.size()) != format_.total_vars()) throw InputError("exponent key has the wrong length");
  for (int x : k)
    if (x < 0) throw InputError("negative exponent");
  for (int j = 0; j < format_.e(); ++j)
    if (slot_degree(format_, k, j) != format_.degree(j))
      throw InputError("exponent vector of factor " + std::to_string(j + 1) + " does not have degree " +
                       std::to_string(format_.degree(j)));
}

void SVTensor::add(const Key& k, const Scalar& c) {
  check_key(k);
  if (!(c.field() == field())) throw InputError("coefficient from a different field");
  add_unchecked(k, c);
}

void SVTensor::add_unchecked(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar SVTensor::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

SVTensor& SVTensor::operator+=(const SVTensor& o) {
  if (!(format_ == o.format_)) throw InputError("adding tensors of different formats");
  for (const auto& [k, c] : o.terms_) add_unchecked(k, c);
  return *this;
}

SVTensor& SVTensor::operator-=(const SVTensor& o) {
  if (!(format_ == o.format_)) throw InputError("subtracting tensors of different formats");
  for (const auto& [k, c] : o.terms_) add_unchecked(k, -c);
  return *this;
}

SVTensor& SVTensor::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

bool operator==(const SVTensor& a, const SVTensor& b) {
  if (!(a.format_ == b.format_) || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, c] : a.terms_) {
    if (it->first != k || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

Vector SVTensor::dense() const {
  auto keys = all_keys(format_);
  Vector v;
  v.reserve(keys.size());
  for (const auto& k : keys) v.push_back(coeff(k));
  return v;
}

SVTensor SVTensor::from_dense(const Format& f, const Vector& v) {
  auto keys = all_keys(f);
  if (keys.size() != v.size()) throw InputError("dense vector has the wrong length");
  SVTensor t(f);
  for (std::size_t i = 0; i < keys.size(); ++i) t.add_unchecked(keys[i], v[i]);
  return t;
}

std::string variable_name(const Format& f, int j, int i) {
  if (f.e() == 1) return (f.dual() ? "y" : "x") + std::to_string(i + 1);
  std::string base(1, static_cast<char>('a' + j % 26));
  if (f.dual()) base = "d" + base;
  return base + std::to_string(i + 1);
}

namespace {

std::string monomial_string(const Format& f, const Key& k) {
  std::string s;
  for (int j = 0; j < f.e(); ++j)
    for (int i = 0; i < f.dim(j); ++i) {
      int x = k[f.offset(j) + i];
      if (x == 0) continue;
      if (!s.empty()) s += "*";
      s += variable_name(f, j, i);
      if (x > 1) s += "^" + std::to_string(x);
    }
  return s.empty() ? "1" : s;
}

template <class Terms, class KeyFn>
std::string terms_string(const Terms& terms, KeyFn key_string) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    bool neg = c.is_rational() && sgn(c.rational()) < 0;
    Scalar a = neg ? -c : c;
    std::string m = key_string(k);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (a.is_one()) {
      os << m;
    } else {
      os << (a.is_rational() ? a.to_string() : "(" + a.to_string() + ")");
      if (m != "1") os << "*" << m;
    }
  }
  return os.str();
}

}  // namespace

std::string SVTensor::to_string() const {
  return terms_string(terms_, [&](const Key& k) { return monomial_string(format_, k); });
}

void MixedTensor::add(int leg, const Key& rest, const Scalar& c) {
  if (c.is_zero()) return;
  MKey k{leg, rest};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar MixedTensor::coeff(int leg, const Key& rest) const {
  auto it = terms_.find(MKey{leg, rest});
  return it == terms_.end() ? Scalar::zero(format_.field()) : it->second;
}

MixedTensor& MixedTensor::operator-=(const MixedTensor& o) {
  if (!(format_ == o.format_) || slot_ != o.slot_) throw InputError("mixed tensor shape mismatch");
  for (const auto& [k, c] : o.terms_) add(k.leg, k.rest, -c);
  return *this;
}

bool operator==(const MixedTensor& a, const MixedTensor& b) {
  if (!(a.format_ == b.format_) || a.slot_ != b.slot_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, c] : a.terms_) {
    if (!(it->first == k) || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::string MixedTensor::to_string() const {
  Format rest = format_.with_degree(slot_, format_.degree(slot_) - 1);
  return terms_string(terms_, [&](const MKey& k) {
    return "(" + variable_name(format_, slot_, k.leg) + ")@" + monomial_string(rest, k.rest);
  });
}

EndoTuple EndoTuple::identity(const Format& f) {
  EndoTuple t;
  for (int j = 0; j < f.e(); ++j) t.mats.push_back(Matrix::identity(f.field(), f.dim(j)));
  return t;
}

EndoTuple EndoTuple::zero(const Format& f) {
  EndoTuple t;
  for (int j = 0; j < f.e(); ++j) t.mats.emplace_back(f.field(), f.dim(j), f.dim(j));
  return t;
}

bool EndoTuple::is_zero() const {
  for (const auto& m : mats)
    if (!m.is_zero()) return false;
  return true;
}

EndoTuple& EndoTuple::operator+=(const EndoTuple& o) {
  if (mats.size() != o.mats.size()) throw InputError("tuple size mismatch");
  for (std::size_t j = 0; j < mats.size(); ++j) mats[j] += o.mats[j];
  return *this;
}

EndoTuple& EndoTuple::operator-=(const EndoTuple& o) {
  if (mats.size() != o.mats.size()) throw InputError("tuple size mismatch");
  for (std::size_t j = 0; j < mats.size(); ++j) mats[j] -= o.mats[j];
  return *this;
}

EndoTuple& EndoTuple::operator*=(const Scalar& s) {
  for (auto& m : mats) m *= s;
  return *this;
}

EndoTuple operator*(const EndoTuple& a, const EndoTuple& b) {
  if (a.mats.size() != b.mats.size()) throw InputError("tuple size mismatch");
  EndoTuple r;
  for (std::size_t j = 0; j < a.mats.size(); ++j) r.mats.push_back(a.mats[j] * b.mats[j]);
  return r;
}

bool operator==(const EndoTuple& a, const EndoTuple& b) { return a.mats == b.mats; }

Vector EndoTuple::flatten() const {
  Vector v;
  for (const auto& m : mats)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) v.push_back(m(i, k));
  return v;
}

EndoTuple EndoTuple::unflatten(const Format& f, const Vector& v) {
  EndoTuple t = zero(f);
  std::size_t pos = 0;
  for (auto& m : t.mats)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) {
        if (pos >= v.size()) throw InputError("flattened tuple too short");
        m(i, k) = v[pos++];
      }
  if (pos != v.size()) throw InputError("flattened tuple too long");
  return t;
}

namespace {

void check_slot(const Format& f, int j, const Matrix& x) {
  if (j < 0 || j >= f.e()) throw InputError("factor index out of range");
  if (x.rows() != static_cast<std::size_t>(f.dim(j)) || x.cols() != static_cast<std::size_t>(f.dim(j)))
    throw InputError("matrix size does not match factor " + std::to_string(j + 1));
}

}  // namespace

SVTensor contract_op(const SVTensor& t, int j, const Matrix& x) {
  const Format& f = t.format();
  check_slot(f, j, x);
  const int off = f.offset(j), n = f.dim(j);
  SVTensor out(f);
  for (const auto& [k, c] : t.terms()) {
    for (int i = 0; i < n; ++i) {
      int mi = k[off + i];
      if (mi == 0) continue;
      Scalar ci = c * Scalar(f.field(), static_cast<long>(mi));
      for (int r = 0; r < n; ++r) {
        const Scalar& xr = x(r, i);
        if (xr.is_zero()) continue;
        Key nk = k;
        --nk[off + i];
        ++nk[off + r];
        out.add_unchecked(nk, ci * xr);
      }
    }
  }
  return out;
}

MixedTensor desymmetrize(const SVTensor& t, int j) {
  const Format& f = t.format();
  if (j < 0 || j >= f.e()) throw InputError("factor index out of range");
  if (f.degree(j) < 1) throw InputError("cannot split a degree-zero factor");
  const int off = f.offset(j), n = f.dim(j);
  Scalar inv_d = Scalar(f.field(), static_cast<long>(f.degree(j))).inverse();
  MixedTensor out(f, j);
  for (const auto& [k, c] : t.terms())
    for (int i = 0; i < n; ++i) {
      int mi = k[off + i];
      if (mi == 0) continue;
      Key rest = k;
      --rest[off + i];
      out.add(i, rest, c * Scalar(f.field(), static_cast<long>(mi)) * inv_d);
    }
  return out;
}

MixedTensor mode_apply(const SVTensor& t, int j, const Matrix& x) {
  const Format& f = t.format();
  check_slot(f, j, x);
  MixedTensor d = desymmetrize(t, j);
  MixedTensor out(f, j);
  const int n = f.dim(j);
  for (const auto& [k, c] : d.terms())
    for (int r = 0; r < n; ++r) {
      const Scalar& xr = x(r, k.leg);
      if (!xr.is_zero()) out.add(r, k.rest, c * xr);
    }
  return out;
}

SVTensor symmetrize(const MixedTensor& m) {
  const Format& f = m.format();
  const int off = f.offset(m.slot());
  SVTensor out(f);
  for (const auto& [k, c] : m.terms()) {
    Key nk = k.rest;
    ++nk[off + k.leg];
    out.add_unchecked(nk, c);
  }
  return out;
}

std::optional<SVTensor> is_symmetric_image(const MixedTensor& m) {
  SVTensor g = symmetrize(m);
  if (desymmetrize(g, m.slot()) == m) return g;
  return std::nullopt;
}

SVTensor apolar_act(const SVTensor& t, const Key& r) {
  const Format& f = t.format();
  if (static_cast<int>(r.size()) != f.total_vars()) throw InputError("dual monomial has the wrong length");
  std::vector<int> degs;
  for (int j = 0; j < f.e(); ++j) {
    int dr = slot_degree(f, r, j);
    degs.push_back(std::max(0, f.degree(j) - dr));
  }
  Format g = f.with_degrees(degs);
  SVTensor out(g);
  for (int j = 0; j < f.e(); ++j)
    if (slot_degree(f, r, j) > f.degree(j)) return out;
  for (const auto& [k, c] : t.terms()) {
    Key nk = k;
    mpz_class factor = 1;
    bool zero = false;
    for (std::size_t i = 0; i < k.size() && !zero; ++i) {
      if (r[i] > k[i]) zero = true;
      for (int s = 0; s < r[i] && !zero; ++s) factor *= k[i] - s;
      nk[i] -= r[i];
    }
    if (zero) continue;
    out.add_unchecked(nk, c * Scalar(f.field(), factor));
  }
  return out;
}

SVTensor apolar_act(const SVTensor& t, const SVTensor& dual) {
  const Format& f = t.format();
  std::vector<int> degs;
  for (int j = 0; j < f.e(); ++j) degs.push_back(std::max(0, f.degree(j) - dual.format().degree(j)));
  SVTensor out(f.with_degrees(degs));
  for (const auto& [r, c] : dual.terms()) {
    SVTensor part = apolar_act(t, r);
    if (part.is_zero()) continue;
    out += part * c;
  }
  return out;
}

SVTensor dual_product(const SVTensor& a, const SVTensor& b) {
  const Format& fa = a.format();
  std::vector<int> degs;
  for (int j = 0; j < fa.e(); ++j) degs.push_back(fa.degree(j) + b.format().degree(j));
  SVTensor out(Format(fa.field(), fa.with_degrees(degs).factors(), true));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Key k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      out.add_unchecked(k, ca * cb);
    }
  return out;
}

bool euler_identity_check(const SVTensor& f, int j) {
  const Format& fm = f.format();
  MixedTensor lhs = desymmetrize(f, j);
  MixedTensor scaled(fm, j);
  Scalar d(fm.field(), static_cast<long>(fm.degree(j)));
  for (const auto& [k, c] : lhs.terms()) scaled.add(k.leg, k.rest, c * d);
  MixedTensor rhs(fm, j);
  for (int i = 0; i < fm.dim(j); ++i) {
    Key r(fm.total_vars(), 0);
    r[fm.offset(j) + i] = 1;
    SVTensor partial = apolar_act(f, r);
    for (const auto& [k, c] : partial.terms()) rhs.add(i, k, c);
  }
  return scaled == rhs;
}

Matrix flattening(const SVTensor& t, int j) {
  const Format& f = t.format();
  Format g = f.with_degree(j, f.degree(j) - 1);
  auto keys = all_keys(g);
  std::map<Key, std::size_t, KeyOrder> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  Matrix m(f.field(), f.dim(j), keys.size());
  const int off = f.offset(j);
  for (const auto& [k, c] : t.terms())
    for (int i = 0; i < f.dim(j); ++i) {
      int mi = k[off + i];
      if (mi == 0) continue;
      Key nk = k;
      --nk[off + i];
      m(i, index.at(nk)) += c * Scalar(f.field(), static_cast<long>(mi));
    }
  return m;
}

Conciseness conciseness(const SVTensor& t) {
  if (t.is_zero()) throw ZeroTensor("the zero tensor has no essential subspaces");
  const Format& f = t.format();
  Conciseness out;
  out.concise = true;
  std::vector<Matrix> left;
  std::vector<int> dims;
  for (int j = 0; j < f.e(); ++j) {
    Matrix fl = flattening(t, j);
    // The essential subspace is the column span of the flattening.
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < fl.cols(); ++c) cols.push_back(fl.column(c));
    auto span = canonical_span(f.field(), cols, f.dim(j));
    int r = static_cast<int>(span.size());
    out.ranks.push_back(r);
    out.concise = out.concise && r == f.dim(j);
    Matrix b = Matrix::from_columns(f.field(), span, f.dim(j));
    left.push_back(left_inverse(b));
    out.bases.push_back(std::move(b));
    dims.push_back(r);
  }
  out.reduced = push_forward(t, left);
  return out;
}

bool is_concise(const SVTensor& t) {
  if (t.is_zero()) return false;
  const Format& f = t.format();
  for (int j = 0; j < f.e(); ++j)
    if (rank(flattening(t, j)) != static_cast<std::size_t>(f.dim(j))) return false;
  return true;
}

SVTensor push_forward(const SVTensor& t, const std::vector<Matrix>& a) {
  const Format& f = t.format();
  if (static_cast<int>(a.size()) != f.e()) throw InputError("one matrix per factor required");
  std::vector<int> in_dims, out_dims;
  std::vector<std::vector<std::vector<Scalar>>> lin(f.e());
  for (int j = 0; j < f.e(); ++j) {
    if (a[j].cols() != static_cast<std::size_t>(f.dim(j))) throw InputError("substitution matrix has wrong width");
    in_dims.push_back(f.dim(j));
    out_dims.push_back(static_cast<int>(a[j].rows()));
    for (int i = 0; i < f.dim(j); ++i) lin[j].push_back(a[j].column(i));
  }
  Format g = f.with_dims(out_dims);
  auto terms = detail::substitute(t.terms(), in_dims, out_dims, lin, Scalar::one(f.field()));
  SVTensor out(g);
  for (auto& [k, c] : terms) out.add_unchecked(k, c);
  return out;
}

SVTensor push_forward(const SVTensor& t, int j, const Matrix& a) {
  std::vector<Matrix> ms;
  for (int s = 0; s < t.format().e(); ++s)
    ms.push_back(s == j ? a : Matrix::identity(t.field(), t.format().dim(s)));
  return push_forward(t, ms);
}

SVTensor product_of_forms(const Format& f, const std::vector<std::vector<Vector>>& forms) {
  if (static_cast<int>(forms.size()) != f.e()) throw InputError("one list of forms per factor required");
  std::vector<int> in_dims, out_dims;
  std::vector<std::vector<std::vector<Scalar>>> lin(f.e());
  Key k;
  for (int j = 0; j < f.e(); ++j) {
    if (static_cast<int>(forms[j].size()) != f.degree(j)) throw InputError("need d_j linear forms in factor j");
    in_dims.push_back(f.degree(j));
    out_dims.push_back(f.dim(j));
    for (const auto& v : forms[j]) {
      if (static_cast<int>(v.size()) != f.dim(j)) throw InputError("linear form has the wrong length");
      lin[j].push_back(v);
    }
    k.insert(k.end(), f.degree(j), 1);
  }
  SVTensor::Terms one_term;
  one_term.emplace(k, Scalar::one(f.field()));
  auto terms = detail::substitute(one_term, in_dims, out_dims, lin, Scalar::one(f.field()));
  SVTensor out(f);
  for (auto& [key, c] : terms) out.add_unchecked(key, c);
  return out;
}

}  // namespace svt

namespace svt {

SVTensor parse_expression(const Format& f, std::string_view text) {
  std::map<std::string, std::pair<int, int>> names;
  for (int j = 0; j < f.e(); ++j)
    for (int i = 0; i < f.dim(j); ++i) names[variable_name(f, j, i)] = {j, i};

  SVTensor out(f);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw InputError("cannot parse expression at offset " + std::to_string(pos) + ": " + what);
  };
  skip();
  if (pos == text.size()) return out;
  bool first = true;
  while (pos < text.size()) {
    bool neg = false;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    skip();
    Scalar coeff = Scalar::one(f.field());
    Key key(f.total_vars(), 0);
    bool have_factor = false;
    for (;;) {
      skip();
      if (pos >= text.size()) fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        coeff *= Scalar::parse(text.substr(start, pos - start), f.field());
      } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string name(text.substr(start, pos - start));
        auto it = names.find(name);
        if (it == names.end()) fail("unknown variable '" + name + "'");
        int power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::size_t s2 = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (s2 == pos) fail("missing exponent");
          power = std::stoi(std::string(text.substr(s2, pos - s2)));
        }
        key[f.offset(it->second.first) + it->second.second] += power;
      } else {
        fail("unexpected character");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    if (coeff.is_zero()) continue;
    out.add(key, neg ? -coeff : coeff);
  }
  return out;
}

}  // namespace svt
