#include "svt/apolar.hpp"

#include <map>

#include "svt/errors.hpp"

namespace svt {

namespace {

using Index = std::map<Key, std::size_t, KeyOrder>;

Index index_of(const std::vector<Key>& keys) {
  Index idx;
  for (std::size_t i = 0; i < keys.size(); ++i) idx.emplace(keys[i], i);
  return idx;
}

void check_degree(const Format& f, const MultiDegree& deg) {
  if (static_cast<int>(deg.size()) != f.e()) throw InputError("multidegree has the wrong number of entries");
  for (int d : deg)
    if (d < 0) throw InputError("negative multidegree");
}

bool exceeds(const Format& f, const MultiDegree& deg) {
  for (int j = 0; j < f.e(); ++j)
    if (deg[j] > f.degree(j)) return true;
  return false;
}

Format dual_format(const Format& f, const MultiDegree& deg) {
  return Format(f.field(), f.with_degrees(deg).factors(), true);
}

}  // namespace

Matrix catalecticant(const SVTensor& t, const MultiDegree& deg) {
  const Format& f = t.format();
  check_degree(f, deg);
  auto cols = all_keys(dual_format(f, deg));
  std::vector<int> rest;
  for (int j = 0; j < f.e(); ++j) rest.push_back(std::max(0, f.degree(j) - deg[j]));
  auto rows = all_keys(f.with_degrees(rest));
  Index ridx = index_of(rows);
  Matrix m(f.field(), rows.size(), cols.size());
  if (exceeds(f, deg)) return m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    SVTensor part = apolar_act(t, cols[c]);
    for (const auto& [k, v] : part.terms()) m(ridx.at(k), c) = v;
  }
  return m;
}

GradedPiece ann_piece(const SVTensor& t, const MultiDegree& deg) {
  const Format& f = t.format();
  check_degree(f, deg);
  GradedPiece out;
  out.degree = deg;
  out.full = exceeds(f, deg);
  Format df = dual_format(f, deg);
  auto cols = all_keys(df);
  out.ambient_dim = cols.size();
  for (const auto& v : kernel_basis(catalecticant(t, deg))) {
    SVTensor r(df);
    for (std::size_t c = 0; c < cols.size(); ++c) r.add_unchecked(cols[c], v[c]);
    out.basis.push_back(std::move(r));
  }
  return out;
}

int min_generator_count(const SVTensor& t, const MultiDegree& deg) {
  const Format& f = t.format();
  GradedPiece top = ann_piece(t, deg);
  Format df = dual_format(f, deg);
  auto cols = all_keys(df);
  Index idx = index_of(cols);
  std::vector<Vector> products;
  for (int j = 0; j < f.e(); ++j) {
    if (deg[j] == 0) continue;
    MultiDegree lower = deg;
    --lower[j];
    GradedPiece low = ann_piece(t, lower);
    for (int i = 0; i < f.dim(j); ++i) {
      Key shift(f.total_vars(), 0);
      shift[f.offset(j) + i] = 1;
      for (const auto& g : low.basis) {
        Vector v = zero_vector(f.field(), cols.size());
        for (const auto& [k, c] : g.terms()) {
          Key nk = k;
          for (std::size_t s = 0; s < nk.size(); ++s) nk[s] += shift[s];
          v[idx.at(nk)] += c;
        }
        products.push_back(std::move(v));
      }
    }
  }
  std::size_t decomposable = products.empty() ? 0 : rank(Matrix::from_rows(f.field(), products, cols.size()));
  return static_cast<int>(top.dim() - decomposable);
}

std::vector<SVTensor> companion_space(const SVTensor& t) {
  const Format& f = t.format();
  f.require_positive_degrees();
  if (!is_concise(t)) throw NotConcise("companion space requires a concise tensor");
  auto keys = all_keys(f);
  std::vector<Vector> rows;
  for (int j = 0; j < f.e(); ++j) {
    Format g = f.with_degree(j, f.degree(j) - 1);
    Index gidx = index_of(all_keys(g));
    // psi annihilates every derivative of t in slot j; G must satisfy the same.
    auto psis = kernel_basis(flattening(t, j));
    const int off = f.offset(j);
    for (int i = 0; i < f.dim(j); ++i)
      for (const auto& psi : psis) {
        Vector row = zero_vector(f.field(), keys.size());
        for (std::size_t c = 0; c < keys.size(); ++c) {
          int mi = keys[c][off + i];
          if (mi == 0) continue;
          Key nk = keys[c];
          --nk[off + i];
          const Scalar& p = psi[gidx.at(nk)];
          if (!p.is_zero()) row[c] = p * Scalar(f.field(), static_cast<long>(mi));
        }
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
  }
  std::vector<Vector> sol;
  if (rows.empty()) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      Vector v = zero_vector(f.field(), keys.size());
      v[c] = Scalar::one(f.field());
      sol.push_back(std::move(v));
    }
  } else {
    sol = kernel_basis(Matrix::from_rows(f.field(), rows, keys.size()));
  }
  std::vector<SVTensor> out;
  for (const auto& v : canonical_span(f.field(), sol, keys.size())) out.push_back(SVTensor::from_dense(f, v));
  return out;
}

int gradient_fiber_dimension(const SVTensor& f) {
  if (f.format().e() != 1) throw ScopeError("gradient fibers are defined for single-factor forms");
  f.format().require_positive_degrees();
  if (!is_concise(f)) throw NotConcise("gradient fiber dimension requires a concise form");
  return min_generator_count(f, {f.format().degree(0)});
}

}  // namespace svt
