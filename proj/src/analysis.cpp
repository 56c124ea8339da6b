#include "svt/analysis.hpp"

#include <algorithm>

#include "svt/apolar.hpp"
#include "svt/errors.hpp"

namespace svt {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::direct_sum: return "direct_sum";
    case Verdict::limit_of_direct_sums: return "limit_of_direct_sums";
    case Verdict::trivial_centroid: return "trivial_centroid";
    case Verdict::undetermined: return "undetermined";
  }
  return "";
}

NilpotentChoice choose_nilpotent(const CentroidAlgebra& alg) {
  NilpotentChoice out;
  for (int k = 1; k < alg.dim(); ++k) {
    UniPoly mp = minimal_polynomial(alg.unit_vector(k), alg);
    LinearSplit s = split_linear_factors(mp);
    if (s.roots.size() != 1 || s.residual.degree() > 0) {
      UniPoly b = s.residual.degree() > 0 ? squarefree_part(s.residual) : squarefree_part(mp);
      if (std::find(out.blocking.begin(), out.blocking.end(), b) == out.blocking.end()) out.blocking.push_back(b);
      continue;
    }
    const int m = s.roots[0].second;
    if (m <= out.index) continue;
    EndoTuple n = alg.tuple(alg.unit_vector(k)) - EndoTuple::identity(alg.format) * s.roots[0].first;
    out.element = std::move(n);
    out.index = m;
  }
  return out;
}

LocalAnalysis analyze_local(const SVTensor& local) {
  LocalAnalysis la;
  la.tensor = local;
  CentroidAlgebra alg = compute_centroid(local);
  la.centroid_dim = alg.dim();
  if (alg.dim() == 1) {
    la.verdict = Verdict::trivial_centroid;
    la.verdict_text = "trivial centroid";
    return la;
  }
  NilpotentChoice c = choose_nilpotent(alg);
  la.blocking = c.blocking;
  if (!c.element) {
    la.verdict = Verdict::undetermined;
    la.verdict_text = "undetermined over " + local.field().to_string();
    return la;
  }
  la.nilpotency = c.index;
  la.element = c.element;
  la.normal_form = extract_components(local, *c.element);
  la.family = build_family(local, *c.element);
  la.limit = verify_limit(*la.family, local);
  if (!la.limit->pass) throw ConsistencyError("degeneration certificate failed: " + la.limit->message);
  la.witness = first_admissible_split(*la.family);
  la.verdict = Verdict::limit_of_direct_sums;
  la.verdict_text = "limit of " + std::to_string(c.index) + "-fold direct sums";
  return la;
}

AnalysisReport analyze(const SVTensor& t) {
  AnalysisReport r;
  r.input = t;
  const Format& f = t.format();
  f.require_positive_degrees();
  if (f.total_degree() < 3)
    throw ScopeError("formats of total degree " + std::to_string(f.total_degree()) +
                     " are not analyzed (the centroid need not be commutative below degree 3)");
  Conciseness c = conciseness(t);
  r.ranks = c.ranks;
  r.concise = c.concise;
  r.reduction = c.bases;
  r.tensor = c.concise ? t : c.reduced;
  if (!c.concise) {
    std::string ranks;
    for (int x : c.ranks) ranks += (ranks.empty() ? "" : ", ") + std::to_string(x);
    r.notice = "input is not concise; analyzing its reduction to dimensions (" + ranks + ")";
  }

  r.split = split(r.tensor);
  r.centroid_dim = r.split.algebra.dim();
  r.routes_agree = centroid_via_apolar(r.tensor).canonical_subspace() == r.split.algebra.canonical_subspace();
  if (!r.routes_agree) throw ConsistencyError("definitional and apolar centroids differ");
  MultiDegree top;
  for (int j = 0; j < f.e(); ++j) top.push_back(f.degree(j));
  r.generator_count = min_generator_count(r.tensor, top);
  if (f.e() == 1) r.gradient_fiber_dim = gradient_fiber_dimension(r.tensor);

  for (const auto& s : r.split.summands) r.locals.push_back(analyze_local(s.local));

  if (r.split.summands.size() >= 2) {
    r.verdict = Verdict::direct_sum;
    r.verdict_text = "direct sum (" + std::to_string(r.split.summands.size()) + " summands)";
  } else if (!r.split.complete) {
    r.verdict = Verdict::undetermined;
    r.verdict_text = "undetermined over " + f.field().to_string();
  } else {
    r.verdict = r.locals[0].verdict;
    r.verdict_text = r.locals[0].verdict_text;
  }
  return r;
}

}  // namespace svt
