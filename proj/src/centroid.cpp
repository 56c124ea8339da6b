#include "svt/centroid.hpp"

#include <map>

#include "svt/apolar.hpp"
#include "svt/errors.hpp"

namespace svt {

namespace {

void require_scope(const SVTensor& t) {
  const Format& f = t.format();
  f.require_positive_degrees();
  if (t.is_zero()) throw ZeroTensor("the zero tensor has no centroid");
  if (f.total_degree() < 3)
    throw ScopeError("centroid computations need total degree at least 3 (got " +
                     std::to_string(f.total_degree()) + "); the centroid need not be commutative");
  if (!is_concise(t)) throw NotConcise("the centroid is only computed for concise tensors");
}

std::vector<int> tuple_offsets(const Format& f) {
  std::vector<int> off{0};
  for (int j = 0; j < f.e(); ++j) off.push_back(off.back() + f.dim(j) * f.dim(j));
  return off;
}

// Sparse column: the coefficients of E_{ki} contracted into slot j of t.
std::map<Key, Scalar, KeyOrder> unit_contraction(const SVTensor& t, int j, int k, int i) {
  const Format& f = t.format();
  const int off = f.offset(j);
  std::map<Key, Scalar, KeyOrder> out;
  for (const auto& [key, c] : t.terms()) {
    int mi = key[off + i];
    if (mi == 0) continue;
    Key nk = key;
    --nk[off + i];
    ++nk[off + k];
    Scalar v = c * Scalar(f.field(), static_cast<long>(mi));
    auto it = out.find(nk);
    if (it == out.end()) out.emplace(std::move(nk), v);
    else it->second += v;
  }
  return out;
}

}  // namespace

CentroidElement CentroidAlgebra::one() const { return unit_vector(0); }

CentroidElement CentroidAlgebra::unit_vector(int k) const {
  Vector v = zero_vector(field(), basis.size());
  v.at(k) = Scalar::one(field());
  return v;
}

EndoTuple CentroidAlgebra::tuple(const CentroidElement& a) const {
  if (a.size() != basis.size()) throw InputError("centroid element has the wrong length");
  EndoTuple r = EndoTuple::zero(format);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!a[k].is_zero()) r += basis[k] * a[k];
  return r;
}

CentroidElement CentroidAlgebra::coordinates(const EndoTuple& r) const {
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(b.flatten());
  Vector target = r.flatten();
  auto x = solve(Matrix::from_columns(field(), cols, target.size()), target);
  if (!x) throw InputError("tuple is not in the centroid algebra");
  return *x;
}

bool CentroidAlgebra::contains(const EndoTuple& r) const {
  try {
    coordinates(r);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

CentroidElement CentroidAlgebra::multiply(const CentroidElement& a, const CentroidElement& b) const {
  const std::size_t n = basis.size();
  Vector out = zero_vector(field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!structure[i][j][k].is_zero()) out[k] += ab * structure[i][j][k];
    }
  }
  return out;
}

CentroidElement CentroidAlgebra::power(const CentroidElement& a, unsigned k) const {
  Vector r = one();
  for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

std::vector<Vector> CentroidAlgebra::canonical_subspace() const {
  std::vector<Vector> vs;
  for (const auto& b : basis) vs.push_back(b.flatten());
  return canonical_span(field(), vs, vs.empty() ? 0 : vs[0].size());
}

CentroidAlgebra algebra_from_span(const Format& f, const std::vector<Vector>& flattened) {
  const Field& field = f.field();
  Vector id = EndoTuple::identity(f).flatten();
  const std::size_t n = id.size();
  auto rows = canonical_span(field, flattened, n);

  // The identity has a 1 in the first entry, so exactly the first row of the
  // echelon form pivots there; the identity replaces it.
  CentroidAlgebra alg;
  alg.format = f;
  alg.basis.push_back(EndoTuple::identity(f));
  bool replaced = false;
  for (const auto& r : rows) {
    if (!replaced && !r[0].is_zero()) {
      replaced = true;
      continue;
    }
    alg.basis.push_back(EndoTuple::unflatten(f, r));
  }
  if (!replaced) throw ConsistencyError("identity tuple missing from the centroid");

  const std::size_t d = alg.basis.size();
  std::vector<Vector> cols;
  for (const auto& b : alg.basis) cols.push_back(b.flatten());
  Matrix bm = Matrix::from_columns(field, cols, n);
  if (rank(bm) != d) throw ConsistencyError("centroid basis is not independent");

  std::vector<Vector> prods;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) prods.push_back((alg.basis[a] * alg.basis[b]).flatten());
  auto coeffs = solve(bm, Matrix::from_columns(field, prods, n));
  if (!coeffs) throw ConsistencyError("centroid is not closed under products");
  alg.structure.assign(d, std::vector<Vector>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) alg.structure[a][b] = coeffs->column(a * d + b);
  return alg;
}

CentroidAlgebra compute_centroid(const SVTensor& t) {
  require_scope(t);
  const Format& f = t.format();
  const Field& field = f.field();
  auto off = tuple_offsets(f);
  const std::size_t unknowns = static_cast<std::size_t>(off.back());

  std::map<Key, std::size_t, KeyOrder> key_index;
  for (const auto& k : all_keys(f)) key_index.emplace(k, key_index.size());
  const std::size_t nkeys = key_index.size();

  std::vector<Vector> rows;
  auto inv_d = [&](int j) { return Scalar(field, static_cast<long>(f.degree(j))).inverse(); };

  // (1/d_1) Y_1 contracted into slot 1 equals (1/d_j) Y_j contracted into slot j.
  for (int j = 1; j < f.e(); ++j) {
    Matrix block(field, nkeys, unknowns);
    for (int s : {0, j}) {
      Scalar w = s == 0 ? inv_d(0) : -inv_d(j);
      const int n = f.dim(s);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
          std::size_t col = static_cast<std::size_t>(off[s] + k * n + i);
          for (const auto& [key, v] : unit_contraction(t, s, k, i)) block(key_index.at(key), col) += w * v;
        }
    }
    for (std::size_t r = 0; r < nkeys; ++r) {
      Vector row = block.row(r);
      if (!is_zero_vector(row)) rows.push_back(std::move(row));
    }
  }

  // Y_j applied to the split-off leg must give a symmetric tensor.
  for (int j = 0; j < f.e(); ++j) {
    if (f.degree(j) < 2) continue;
    const int n = f.dim(j);
    std::map<MixedTensor::MKey, Vector> eqs;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        std::size_t col = static_cast<std::size_t>(off[j] + k * n + i);
        MixedTensor m = mode_apply(t, j, Matrix::unit(field, n, k, i));
        MixedTensor defect = m;
        defect -= desymmetrize(symmetrize(m), j);
        for (const auto& [mk, v] : defect.terms()) {
          auto it = eqs.find(mk);
          if (it == eqs.end()) it = eqs.emplace(mk, zero_vector(field, unknowns)).first;
          it->second[col] += v;
        }
      }
    for (auto& [mk, row] : eqs)
      if (!is_zero_vector(row)) rows.push_back(std::move(row));
  }

  std::vector<Vector> kernel;
  if (rows.empty()) {
    for (std::size_t c = 0; c < unknowns; ++c) {
      Vector v = zero_vector(field, unknowns);
      v[c] = Scalar::one(field);
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = kernel_basis(Matrix::from_rows(field, rows, unknowns));
  }
  return algebra_from_span(f, kernel);
}

CentroidAlgebra centroid_via_apolar(const SVTensor& t) {
  require_scope(t);
  const Format& f = t.format();
  std::vector<Matrix> ft;
  for (int j = 0; j < f.e(); ++j) ft.push_back(flattening(t, j).transpose());
  std::vector<Vector> tuples;
  for (const auto& g : companion_space(t)) {
    EndoTuple r;
    for (int j = 0; j < f.e(); ++j) {
      // Row k of X_j expresses the k-th derivative of G through those of T.
      auto xt = solve(ft[j], flattening(g, j).transpose());
      if (!xt) throw ConsistencyError("companion tensor derivatives outside the span of those of T");
      r.mats.push_back(xt->transpose());
    }
    tuples.push_back(r.flatten());
  }
  return algebra_from_span(f, tuples);
}

UniPoly minimal_polynomial(const CentroidElement& a, const CentroidAlgebra& alg) {
  const Field& field = alg.field();
  std::vector<Vector> powers{alg.one()};
  for (;;) {
    Vector next = alg.multiply(powers.back(), a);
    auto c = solve(Matrix::from_columns(field, powers, next.size()), next);
    if (c) {
      std::vector<Scalar> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(Scalar::one(field));
      return UniPoly(field, coeffs);
    }
    powers.push_back(std::move(next));
  }
}

UniPoly minimal_polynomial(const EndoTuple& r) {
  if (r.size() == 0) throw InputError("empty tuple");
  const Field& field = r.mats[0].field();
  EndoTuple id = r;
  for (auto& m : id.mats) m = Matrix::identity(field, m.rows());
  std::vector<Vector> powers{id.flatten()};
  EndoTuple cur = id;
  for (;;) {
    cur = cur * r;
    Vector next = cur.flatten();
    auto c = solve(Matrix::from_columns(field, powers, next.size()), next);
    if (c) {
      std::vector<Scalar> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(Scalar::one(field));
      return UniPoly(field, coeffs);
    }
    powers.push_back(std::move(next));
  }
}

SVTensor act(const EndoTuple& r, const SVTensor& t) {
  const Format& f = t.format();
  if (r.size() != f.e()) throw InputError("tuple has the wrong number of slots");
  std::optional<SVTensor> first;
  for (int j = 0; j < f.e(); ++j) {
    auto g = is_symmetric_image(mode_apply(t, j, r.mats[j]));
    if (!g) throw ConsistencyError("tuple does not act symmetrically in slot " + std::to_string(j + 1));
    if (!first) first = std::move(*g);
    else if (!(*g == *first)) throw ConsistencyError("slot actions disagree in slot " + std::to_string(j + 1));
  }
  return *first;
}

SVTensor act(const CentroidElement& a, const CentroidAlgebra& alg, const SVTensor& t) {
  return act(alg.tuple(a), t);
}

bool is_in_centroid(const EndoTuple& r, const SVTensor& t) {
  try {
    act(r, t);
    return true;
  } catch (const ConsistencyError&) {
    return false;
  }
}

}  // namespace svt
