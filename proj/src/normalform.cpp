#include "svt/normalform.hpp"

#include <functional>

#include "svt/errors.hpp"
#include "svt/polytensor.hpp"

namespace svt {

namespace {

std::size_t span_rank(const Field& field, const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(Matrix::from_rows(field, vs, dim));
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  Vector out = zero_vector(m.field(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

SVTensor to_jordan(const SVTensor& t, const std::vector<JordanData>& jordan) {
  std::vector<Matrix> inv;
  for (const auto& jd : jordan) inv.push_back(inverse(jd.basis));
  return push_forward(t, inv);
}

}  // namespace

JordanData jordan_data(const Matrix& l) {
  if (l.rows() != l.cols()) throw InputError("nilpotent operator must be square");
  const Field& field = l.field();
  const std::size_t dim = l.rows();
  JordanData jd;
  jd.l = l;

  // kernels[k] = Ker L^k
  std::vector<std::vector<Vector>> kernels{{}};
  std::vector<Matrix> powers{Matrix::identity(field, dim)};
  while (kernels.back().size() < dim) {
    if (powers.size() > dim) throw InputError("operator is not nilpotent");
    powers.push_back(powers.back() * l);
    kernels.push_back(kernel_basis(powers.back()));
  }
  jd.index = static_cast<int>(kernels.size()) - 1;
  jd.multiplicities.assign(jd.index + 1, 0);

  for (int q = jd.index; q >= 1; --q) {
    std::vector<Vector> s = kernels[q - 1];
    for (const auto& c : jd.columns) s.push_back(c.vectors[c.height - q]);
    for (const auto& cand : canonical_span(field, kernels[q], dim)) {
      std::size_t before = span_rank(field, s, dim);
      s.push_back(cand);
      if (span_rank(field, s, dim) == before) {
        s.pop_back();
        continue;
      }
      JordanColumn col;
      col.height = q;
      col.vectors.push_back(cand);
      for (int r = 1; r < q; ++r) col.vectors.push_back(mat_vec(l, col.vectors.back()));
      jd.columns.push_back(std::move(col));
      ++jd.multiplicities[q];
    }
  }

  std::vector<Vector> cols;
  for (const auto& c : jd.columns)
    for (int r = c.height - 1; r >= 0; --r) {
      cols.push_back(c.vectors[r]);
      jd.labels.emplace_back(c.height, r);
    }
  if (cols.size() != dim) throw ConsistencyError("Jordan basis has the wrong size");
  jd.basis = Matrix::from_columns(field, cols, dim);
  Matrix pinv = inverse(jd.basis);

  Matrix mj(field, dim, dim), pj(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto [q, r] = jd.labels[i];
    // Positions run x^{(q,q-1)}, ..., x^{(q,0)}, so x^{(q,r-1)} sits one to the right.
    if (r > 0) mj(i + 1, i) = Scalar::one(field);
    if (r == q - 1) pj(i, i) = Scalar::one(field);
  }
  jd.partial_inverse = jd.basis * mj * pinv;
  jd.bottom_projection = jd.basis * pj * pinv;
  return jd;
}

SVTensor NormalForm::jordan_component(int k) const { return to_jordan(components.at(k - 1), jordan); }

int nilpotency_index(const EndoTuple& l) {
  UniPoly mp = minimal_polynomial(l);
  for (int i = 0; i < mp.degree(); ++i)
    if (!mp.coeff(i).is_zero()) throw InputError("element is not nilpotent (minimal polynomial " + mp.to_string() + ")");
  return mp.degree();
}

SVTensor layer(const SVTensor& tk, int k, const std::vector<JordanData>& jordan) {
  if (k == 1) return tk;
  std::vector<MatrixPoly> r;
  for (const auto& jd : jordan) r.push_back(geometric_series(jd.partial_inverse, k));
  return push_forward(tk, r).coefficient(k - 1);
}

bool in_layer_subspace(const SVTensor& tk, int k, const std::vector<JordanData>& jordan) {
  SVTensor local = to_jordan(tk, jordan);
  const Format& f = local.format();
  for (const auto& [key, c] : local.terms())
    for (int j = 0; j < f.e(); ++j)
      for (int i = 0; i < f.dim(j); ++i) {
        if (key[f.offset(j) + i] == 0) continue;
        auto [q, r] = jordan[j].labels[i];
        if (r != q - 1 || q < k) return false;
      }
  return true;
}

NormalForm extract_components(const SVTensor& t, const EndoTuple& l) {
  const Format& f = t.format();
  if (l.size() != f.e()) throw InputError("tuple has the wrong number of slots");
  if (t.is_zero()) throw ZeroTensor("the zero tensor has no normal form");
  NormalForm nf;
  nf.n = nilpotency_index(l);
  if (!is_in_centroid(l, t)) throw InputError("element is not in the centroid of the tensor");
  nf.nilpotent = l;
  for (const auto& m : l.mats) nf.jordan.push_back(jordan_data(m));
  nf.components.assign(nf.n, SVTensor(f));

  const Scalar inv_d = Scalar(f.field(), static_cast<long>(f.degree(0))).inverse();
  std::vector<Matrix> lpow{Matrix::identity(f.field(), f.dim(0))};
  for (int k = 1; k < nf.n; ++k) lpow.push_back(lpow.back() * l.mats[0]);

  SVTensor cur = t;
  for (int k = nf.n; k >= 1; --k) {
    SVTensor tk = contract_op(cur, 0, lpow[k - 1]) * inv_d;
    if (!in_layer_subspace(tk, k, nf.jordan))
      throw ConsistencyError("component T_" + std::to_string(k) + " leaves its prescribed subspace");
    cur -= layer(tk, k, nf.jordan);
    nf.components[k - 1] = std::move(tk);
  }
  if (!cur.is_zero()) throw ConsistencyError("layers do not exhaust the tensor: " + cur.to_string());
  return nf;
}

NormalForm extract_components(const SVTensor& t, const CentroidElement& a, const CentroidAlgebra& alg) {
  return extract_components(t, alg.tuple(a));
}

SVTensor reconstruct(const NormalForm& nf) {
  if (nf.components.empty()) throw InputError("normal form has no components");
  SVTensor out(nf.components[0].format());
  for (int k = 1; k <= static_cast<int>(nf.components.size()); ++k)
    out += layer(nf.components[k - 1], k, nf.jordan);
  return out;
}

VeroneseForm veronese_form(const SVTensor& f, const Matrix& l) {
  if (f.format().e() != 1) throw ScopeError("the differential-operator form needs a single factor");
  NormalForm nf = extract_components(f, EndoTuple{{l}});
  VeroneseForm vf;
  vf.n = nf.n;
  vf.jordan = nf.jordan[0];
  vf.components = nf.components;
  Matrix mi = vf.jordan.partial_inverse;
  for (int i = 1; i < vf.n; ++i) {
    vf.operators.push_back(mi * vf.jordan.bottom_projection);
    mi = mi * vf.jordan.partial_inverse;
  }
  if (!(veronese_sum(vf.components, vf.operators) == f))
    throw ConsistencyError("differential-operator form does not reproduce the form");
  return vf;
}

VeroneseForm veronese_form(const SVTensor& f, const CentroidElement& a, const CentroidAlgebra& alg) {
  return veronese_form(f, alg.tuple(a).mats.at(0));
}

SVTensor veronese_sum(const std::vector<SVTensor>& components, const std::vector<Matrix>& operators) {
  if (components.empty()) throw InputError("no components");
  const Field& field = components[0].field();
  SVTensor out(components[0].format());
  const int parts = static_cast<int>(operators.size());
  for (int k = 1; k <= static_cast<int>(components.size()); ++k) {
    // Partitions of k - 1 with parts at most `parts`, applied largest part first.
    std::function<void(int, int, SVTensor)> walk = [&](int rest, int largest, SVTensor cur) {
      if (rest == 0) {
        out += cur;
        return;
      }
      for (int i = std::min(largest, rest); i >= 1; --i) {
        if (i > parts) continue;
        SVTensor next = cur;
        int rem = rest;
        for (long nu = 1; rem >= i; ++nu) {
          next = contract_op(next, 0, operators[i - 1]) * Scalar(field, mpq_class(1, nu));
          rem -= i;
          walk(rem, i - 1, next);
        }
      }
    };
    walk(k - 1, k - 1, components[k - 1]);
  }
  return out;
}

}  // namespace svt
