#pragma once

// Primitive idempotents of the centroid and the finest direct sum
// decomposition they induce.

#include <vector>

#include "svt/centroid.hpp"

namespace svt {

struct IdempotentSplit {
  std::vector<CentroidElement> idempotents;
  bool complete = true;
  /// Irreducible factors of degree >= 2 that prevented a full split.
  std::vector<UniPoly> blocking;
};

/// Deterministic sweep over the basis of A, splitting blocks by CRT
/// interpolation on the factorization of block minimal polynomials.
IdempotentSplit primitive_idempotents(const CentroidAlgebra& alg);

/// Minimal polynomial of e*a inside the block algebra eA (e is its unit).
UniPoly block_minimal_polynomial(const CentroidAlgebra& alg, const CentroidElement& e, const CentroidElement& a);

struct Summand {
  CentroidElement idempotent;
  std::vector<Matrix> bases;  // per slot, n_j x k_j; columns span V_{j,i}
  SVTensor ambient;           // T_i in the coordinates of V_1, ..., V_e
  SVTensor local;             // T_i in the coordinates of the bases
  int centroid_dim = 0;
};

struct SplitResult {
  CentroidAlgebra algebra;
  std::vector<Summand> summands;
  bool complete = true;
  std::vector<UniPoly> blocking;
};

/// Splits a concise tensor of total degree >= 3 and verifies the result:
/// the summands add up to t, live on independent subspaces, are concise there,
/// and their centroid dimensions add up to that of t.
SplitResult split(const SVTensor& t);

enum class DirectSumVerdict { yes, no, undetermined };

struct DirectSumAnswer {
  DirectSumVerdict verdict = DirectSumVerdict::no;
  int summands = 1;
  std::vector<UniPoly> blocking;
};

DirectSumAnswer is_direct_sum(const SVTensor& t);
DirectSumAnswer direct_sum_verdict(const SplitResult& r);

std::string to_string(DirectSumVerdict v);

}  // namespace svt
