#include "svt/degeneration.hpp"

#include <algorithm>

#include "svt/errors.hpp"

namespace svt {

std::vector<Scalar> vandermonde_coefficients(const std::vector<Scalar>& omega) {
  const std::size_t k = omega.size();
  if (k == 0) throw InputError("need at least one omega");
  const Field field = omega[0].field();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (omega[i] == omega[j]) throw InputError("omegas must be pairwise distinct");
  Matrix v(field, k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Scalar p = Scalar::one(field);
    for (std::size_t g = 0; g < k; ++g) {
      v(g, j) = p;
      p *= omega[j];
    }
  }
  Vector rhs = zero_vector(field, k);
  rhs[k - 1] = Scalar::one(field);
  auto a = solve(v, rhs);
  if (!a) throw ConsistencyError("Vandermonde system is singular");
  return *a;
}

std::vector<Scalar> default_omegas(const Field& field, int n) {
  std::vector<Scalar> out;
  if (field.is_rational()) {
    for (long i = 0; static_cast<int>(out.size()) < n; ++i) {
      if (i == 0) {
        out.emplace_back(field, 0L);
        continue;
      }
      out.emplace_back(field, i);
      if (static_cast<int>(out.size()) < n) out.emplace_back(field, -i);
    }
  } else {
    if (static_cast<std::uint64_t>(n) > field.characteristic())
      throw CharacteristicTooSmall("need " + std::to_string(n) + " distinct field elements");
    for (long i = 0; i < n; ++i) out.emplace_back(field, i);
  }
  return out;
}

DegenFamily assemble_family(const NormalForm& nf, const std::vector<Scalar>& omega,
                            const std::vector<std::vector<Scalar>>& alpha) {
  const int n = nf.n;
  if (static_cast<int>(omega.size()) != n) throw InputError("need exactly n omegas");
  if (static_cast<int>(alpha.size()) != n) throw InputError("need n rows of coefficients");
  const Format& f = nf.components.at(0).format();
  const Field& field = f.field();
  DegenFamily fam;
  fam.format = f;
  fam.n = n;
  fam.omega = omega;
  fam.alpha = alpha;
  fam.normal_form = nf;
  fam.family = PolyTensor(f);

  for (int j = 1; j <= n; ++j) {
    std::vector<MatrixPoly> r;
    std::vector<MatrixPoly> wit;
    for (const auto& jd : nf.jordan) {
      MatrixPoly series = geometric_series(jd.partial_inverse * omega[j - 1], n);
      std::vector<Vector> bottoms;
      for (const auto& c : jd.columns)
        if (c.height >= j) bottoms.push_back(c.vectors[c.height - 1]);
      Matrix b = Matrix::from_columns(field, bottoms, jd.l.rows());
      MatrixPoly w;
      for (const auto& m : series.coeffs) w.coeffs.push_back(m * b);
      wit.push_back(std::move(w));
      r.push_back(std::move(series));
    }
    PolyTensor piece(f);
    for (int k = j; k <= n; ++k) {
      if (static_cast<int>(alpha[k - 1].size()) != k) throw InputError("coefficient row has the wrong length");
      const Scalar& a = alpha[k - 1][j - 1];
      if (a.is_zero() || nf.components[k - 1].is_zero()) continue;
      PolyTensor p = push_forward(nf.components[k - 1], r);
      p *= UniPoly::monomial(a, n - k);
      piece += p;
    }
    fam.family += piece;
    fam.pieces.push_back(std::move(piece));
    fam.witness.push_back(std::move(wit));
  }
  return fam;
}

DegenFamily build_family(const SVTensor& t, const EndoTuple& l, const std::vector<Scalar>& omega) {
  NormalForm nf = extract_components(t, l);
  if (static_cast<int>(omega.size()) != nf.n)
    throw InputError("need " + std::to_string(nf.n) + " omegas, got " + std::to_string(omega.size()));
  std::vector<std::vector<Scalar>> alpha;
  for (int k = 1; k <= nf.n; ++k)
    alpha.push_back(vandermonde_coefficients(std::vector<Scalar>(omega.begin(), omega.begin() + k)));
  return assemble_family(nf, omega, alpha);
}

DegenFamily build_family(const SVTensor& t, const EndoTuple& l) {
  return build_family(t, l, default_omegas(t.field(), nilpotency_index(l)));
}

DegenFamily build_family(const SVTensor& t, const CentroidElement& a, const CentroidAlgebra& alg,
                         const std::vector<Scalar>& omega) {
  return build_family(t, alg.tuple(a), omega);
}

LimitReport verify_limit(const DegenFamily& fam, const SVTensor& t) {
  LimitReport rep;
  rep.valuation = fam.family.valuation();
  for (int d = 0; d < fam.n; ++d) {
    SVTensor c = fam.family.coefficient(d);
    SVTensor expected = d == fam.n - 1 ? t : SVTensor(t.format());
    if (!(c == expected)) {
      rep.bad_degree = d;
      rep.discrepancy = c - expected;
      rep.message = "coefficient of t^" + std::to_string(d) + " differs by " + rep.discrepancy.to_string();
      return rep;
    }
  }
  rep.pass = true;
  rep.message = "S_t = t^" + std::to_string(fam.n - 1) + " T + O(t^" + std::to_string(fam.n) + ")";
  return rep;
}

SplitWitness evaluate_and_split(const DegenFamily& fam, const Scalar& t0) {
  if (t0.is_zero()) throw DegenerateParameter("t0 = 0 is the limit point itself");
  const Format& f = fam.format;
  const Field& field = f.field();
  SplitWitness w;
  w.t0 = t0;
  w.total = fam.family.evaluate(t0);

  for (int i = 0; i < f.e(); ++i) {
    std::vector<Vector> cols;
    for (const auto& group : fam.witness) {
      Matrix m = group[i].evaluate(t0);
      for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    }
    if (cols.size() != static_cast<std::size_t>(f.dim(i)) ||
        determinant(Matrix::from_columns(field, cols, f.dim(i))).is_zero())
      throw DegenerateParameter("block-Vandermonde matrix of slot " + std::to_string(i + 1) + " is singular at t0 = " +
                                t0.to_string());
  }

  SVTensor sum(f);
  for (int j = 1; j <= fam.n; ++j) {
    SVTensor s = fam.pieces[j - 1].evaluate(t0);
    if (s.is_zero())
      throw DegenerateParameter("summand " + std::to_string(j) + " vanishes at t0 = " + t0.to_string());
    std::vector<Matrix> bases, inv;
    for (const auto& g : fam.witness[j - 1]) {
      bases.push_back(g.evaluate(t0));
      inv.push_back(left_inverse(bases.back()));
    }
    SVTensor local = push_forward(s, inv);
    if (!(push_forward(local, bases) == s))
      throw ConsistencyError("summand " + std::to_string(j) + " leaves its witness subspaces");
    sum += s;
    w.concise.push_back(is_concise(local));
    w.summands.push_back(std::move(s));
    w.bases.push_back(std::move(bases));
    w.local.push_back(std::move(local));
  }
  if (!(sum == w.total)) throw ConsistencyError("summands do not add up to the family member");
  return w;
}

SplitWitness first_admissible_split(const DegenFamily& fam, int tries) {
  for (long k = 1; k <= tries; ++k) {
    try {
      SplitWitness w = evaluate_and_split(fam, Scalar(fam.format.field(), k));
      if (std::all_of(w.concise.begin(), w.concise.end(), [](bool c) { return c; })) return w;
    } catch (const DegenerateParameter&) {
    }
  }
  throw DegenerateParameter("no admissible t0 among the first " + std::to_string(tries) + " candidates");
}

}  // namespace svt
