#pragma once

// One-parameter families S_t = t^{n-1} T + O(t^n) whose members at t != 0 are
// n-fold direct sums.

#include <string>
#include <vector>

#include "svt/normalform.hpp"
#include "svt/polytensor.hpp"

namespace svt {

/// alpha with sum_j alpha_j omega_j^{g-1} = [g == k] for g = 1..k.
std::vector<Scalar> vandermonde_coefficients(const std::vector<Scalar>& omega);

/// (0, 1, -1, 2, -2, ...) over Q; (0, 1, ..., n-1) over F_p.
std::vector<Scalar> default_omegas(const Field& field, int n);

struct DegenFamily {
  Format format;
  int n = 1;
  std::vector<Scalar> omega;
  std::vector<std::vector<Scalar>> alpha;  // alpha[k-1][j-1], j <= k
  NormalForm normal_form;
  PolyTensor family;               // S_t
  std::vector<PolyTensor> pieces;  // pieces[j-1] = T^{(j)}(t), summing to S_t
  /// witness[j-1][i]: columns R_i(t omega_j) x^{(q,q-1)} over q >= j spanning slot i of piece j.
  std::vector<std::vector<MatrixPoly>> witness;
};

/// Assembles the family from a normal form, omegas and coefficients.
DegenFamily assemble_family(const NormalForm& nf, const std::vector<Scalar>& omega,
                            const std::vector<std::vector<Scalar>>& alpha);

DegenFamily build_family(const SVTensor& t, const EndoTuple& l, const std::vector<Scalar>& omega);
DegenFamily build_family(const SVTensor& t, const EndoTuple& l);
DegenFamily build_family(const SVTensor& t, const CentroidElement& a, const CentroidAlgebra& alg,
                         const std::vector<Scalar>& omega);

struct LimitReport {
  bool pass = false;
  int valuation = -1;
  /// First power of t at which the expansion disagrees with t^{n-1} T (-1 when passing).
  int bad_degree = -1;
  /// Coefficient at bad_degree minus the expected one.
  SVTensor discrepancy;
  std::string message;
};

/// Coefficient-by-coefficient check of S_t = t^{n-1} T + O(t^n).
LimitReport verify_limit(const DegenFamily& fam, const SVTensor& t);

struct SplitWitness {
  Scalar t0;
  SVTensor total;                         // S_{t0}
  std::vector<SVTensor> summands;         // T^{(j)}(t0)
  std::vector<std::vector<Matrix>> bases; // bases[j-1][i]
  std::vector<SVTensor> local;            // summands in the coordinates of their bases
  std::vector<bool> concise;              // local summand concise on its bases
};

/// Throws DegenerateParameter for t0 = 0, singular block-Vandermonde matrices
/// or a vanishing summand; throws ConsistencyError if a verification fails.
SplitWitness evaluate_and_split(const DegenFamily& fam, const Scalar& t0);

/// Tries t0 = 1, 2, 3, ... (at most `tries` values) and returns the first
/// split whose summands are all concise on their subspaces.
SplitWitness first_admissible_split(const DegenFamily& fam, int tries = 16);

}  // namespace svt
