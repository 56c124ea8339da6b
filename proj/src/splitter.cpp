#include "svt/splitter.hpp"

#include <algorithm>

#include "svt/errors.hpp"

namespace svt {

namespace {

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector scale(Vector a, const Scalar& s) {
  for (auto& x : a) x *= s;
  return a;
}

// p(x) inside the block algebra whose unit is e.
Vector evaluate(const CentroidAlgebra& alg, const UniPoly& p, const CentroidElement& e, const CentroidElement& x) {
  Vector r = zero_vector(alg.field(), alg.dim());
  for (int k = p.degree(); k >= 0; --k) r = add(alg.multiply(r, x), scale(e, p.coeff(k)));
  return r;
}

struct Parts {
  std::vector<UniPoly> coprime;  // pairwise coprime, product is the input
  std::vector<UniPoly> blocking;
};

Parts coprime_parts(const UniPoly& f) {
  Parts out;
  if (f.field().is_rational()) {
    LinearSplit s = split_linear_factors(f);
    for (const auto& [root, m] : s.roots) out.coprime.push_back(UniPoly::linear(root).pow(m));
    if (s.residual.degree() > 0) {
      out.coprime.push_back(s.residual);
      out.blocking.push_back(squarefree_part(s.residual));
    }
  } else {
    for (const auto& [g, m] : factor_fp(f)) {
      out.coprime.push_back(g.pow(m));
      if (g.degree() > 1) out.blocking.push_back(g);
    }
  }
  return out;
}

// Orthogonal idempotents of the block eA, one per coprime part.
std::vector<Vector> crt_idempotents(const CentroidAlgebra& alg, const CentroidElement& e, const CentroidElement& x,
                                    const UniPoly& f, const std::vector<UniPoly>& parts) {
  std::vector<Vector> out;
  for (const auto& q : parts) {
    UniPoly c = f / q;
    ExtGcd g = ext_gcd(q, c);
    if (!g.g.is_one()) throw ConsistencyError("minimal polynomial factors are not coprime");
    out.push_back(evaluate(alg, (g.t * c) % f, e, x));
  }
  return out;
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return cmp(a.rational(), b.rational());
  return a.residue() < b.residue() ? -1 : a.residue() > b.residue() ? 1 : 0;
}

bool descending(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

Matrix column_span(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Matrix::from_columns(m.field(), canonical_span(m.field(), cols, m.rows()), m.rows());
}

}  // namespace

UniPoly block_minimal_polynomial(const CentroidAlgebra& alg, const CentroidElement& e, const CentroidElement& a) {
  const Field& field = alg.field();
  Vector x = alg.multiply(e, a);
  std::vector<Vector> powers{e};
  Vector next = x;
  for (;;) {
    auto c = solve(Matrix::from_columns(field, powers, next.size()), next);
    if (c) {
      std::vector<Scalar> coeffs;
      for (const auto& v : *c) coeffs.push_back(-v);
      coeffs.push_back(Scalar::one(field));
      return UniPoly(field, coeffs);
    }
    powers.push_back(next);
    next = alg.multiply(next, x);
  }
}

IdempotentSplit primitive_idempotents(const CentroidAlgebra& alg) {
  std::vector<Vector> blocks{alg.one()};
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t b = 0; b < blocks.size() && !progress; ++b) {
      for (int k = 1; k < alg.dim() && !progress; ++k) {
        Vector x = alg.multiply(blocks[b], alg.unit_vector(k));
        UniPoly f = block_minimal_polynomial(alg, blocks[b], alg.unit_vector(k));
        Parts parts = coprime_parts(f);
        if (parts.coprime.size() < 2) continue;
        auto pieces = crt_idempotents(alg, blocks[b], x, f, parts.coprime);
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
        blocks.insert(blocks.end(), pieces.begin(), pieces.end());
        progress = true;
      }
    }
  }

  IdempotentSplit out;
  for (const auto& e : blocks) {
    for (int k = 1; k < alg.dim(); ++k) {
      Parts parts = coprime_parts(block_minimal_polynomial(alg, e, alg.unit_vector(k)));
      for (auto& g : parts.blocking)
        if (std::find(out.blocking.begin(), out.blocking.end(), g) == out.blocking.end())
          out.blocking.push_back(std::move(g));
    }
  }
  out.complete = out.blocking.empty();
  std::sort(blocks.begin(), blocks.end(), descending);
  out.idempotents = std::move(blocks);
  return out;
}

SplitResult split(const SVTensor& t) {
  SplitResult r;
  r.algebra = compute_centroid(t);
  IdempotentSplit ids = primitive_idempotents(r.algebra);
  r.complete = ids.complete;
  r.blocking = ids.blocking;

  const Format& f = t.format();
  SVTensor sum(f);
  int dim_sum = 0;
  for (const auto& e : ids.idempotents) {
    Summand s;
    s.idempotent = e;
    EndoTuple tuple = r.algebra.tuple(e);
    s.ambient = act(tuple, t);
    if (s.ambient.is_zero()) throw ConsistencyError("an idempotent kills the tensor");
    std::vector<Matrix> inv;
    for (int j = 0; j < f.e(); ++j) {
      s.bases.push_back(column_span(tuple.mats[j]));
      inv.push_back(left_inverse(s.bases.back()));
    }
    s.local = push_forward(s.ambient, inv);
    if (!(push_forward(s.local, s.bases) == s.ambient))
      throw ConsistencyError("summand does not live on its slot subspaces");
    if (!is_concise(s.local)) throw ConsistencyError("summand is not concise on its slot subspaces");
    s.centroid_dim = compute_centroid(s.local).dim();
    dim_sum += s.centroid_dim;
    sum += s.ambient;
    r.summands.push_back(std::move(s));
  }
  if (!(sum == t)) throw ConsistencyError("summands do not add up to the tensor");
  for (int j = 0; j < f.e(); ++j) {
    std::vector<Vector> cols;
    for (const auto& s : r.summands)
      for (std::size_t c = 0; c < s.bases[j].cols(); ++c) cols.push_back(s.bases[j].column(c));
    if (rank(Matrix::from_columns(t.field(), cols, f.dim(j))) != cols.size())
      throw ConsistencyError("slot subspaces are not independent");
    if (r.complete && cols.size() != static_cast<std::size_t>(f.dim(j)))
      throw ConsistencyError("slot subspaces do not span the slot");
  }
  if (r.complete && dim_sum != r.algebra.dim())
    throw ConsistencyError("centroid dimensions of the summands do not add up");
  return r;
}

DirectSumAnswer direct_sum_verdict(const SplitResult& r) {
  DirectSumAnswer a;
  a.summands = static_cast<int>(r.summands.size());
  a.blocking = r.blocking;
  if (a.summands >= 2) a.verdict = DirectSumVerdict::yes;
  else if (!r.complete) a.verdict = DirectSumVerdict::undetermined;
  else a.verdict = DirectSumVerdict::no;
  return a;
}

DirectSumAnswer is_direct_sum(const SVTensor& t) { return direct_sum_verdict(split(t)); }

std::string to_string(DirectSumVerdict v) {
  switch (v) {
    case DirectSumVerdict::yes: return "direct sum";
    case DirectSumVerdict::no: return "not a direct sum";
    case DirectSumVerdict::undetermined: return "undetermined over the working field";
  }
  return "";
}

}  // namespace svt
