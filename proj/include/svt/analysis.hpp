#pragma once

// The full pipeline: conciseness, centroid, splitting, and for every local
// summand a normal form with its degeneration certificate.

#include <optional>
#include <string>
#include <vector>

#include "svt/degeneration.hpp"
#include "svt/splitter.hpp"

namespace svt {

enum class Verdict { direct_sum, limit_of_direct_sums, trivial_centroid, undetermined };

struct LocalAnalysis {
  SVTensor tensor;  // local coordinates of the summand
  int centroid_dim = 1;
  Verdict verdict = Verdict::trivial_centroid;
  std::string verdict_text;
  int nilpotency = 1;
  std::optional<EndoTuple> element;  // nilpotent part of the chosen centroid element
  std::optional<NormalForm> normal_form;
  std::optional<DegenFamily> family;
  std::optional<LimitReport> limit;
  std::optional<SplitWitness> witness;
  std::vector<UniPoly> blocking;
};

struct AnalysisReport {
  SVTensor input;
  std::vector<int> ranks;
  bool concise = true;
  std::optional<std::string> notice;
  SVTensor tensor;                    // the concise tensor actually analyzed
  std::vector<Matrix> reduction;      // bases of the essential subspaces (input coordinates)
  int centroid_dim = 1;
  bool routes_agree = true;           // definitional and apolar centroids coincide
  int generator_count = 0;
  std::optional<int> gradient_fiber_dim;
  Verdict verdict = Verdict::trivial_centroid;
  std::string verdict_text;
  SplitResult split;
  std::vector<LocalAnalysis> locals;  // one per summand
};

/// Nilpotent part of the basis element of largest nilpotency index, when
/// every basis element has a single eigenvalue in the field.
struct NilpotentChoice {
  std::optional<EndoTuple> element;
  int index = 1;
  std::vector<UniPoly> blocking;
};
NilpotentChoice choose_nilpotent(const CentroidAlgebra& alg);

LocalAnalysis analyze_local(const SVTensor& local);

/// Throws ScopeError for total degree below 3 and ZeroTensor for zero input.
AnalysisReport analyze(const SVTensor& t);

std::string verdict_name(Verdict v);

}  // namespace svt
