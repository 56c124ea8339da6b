#pragma once

// The centroid algebra of a concise tensor: tuples (X_1, ..., X_e) acting the
// same way through every slot.

#include <vector>

#include "svt/poly.hpp"
#include "svt/tensor.hpp"

namespace svt {

/// Coordinates of an element in a CentroidAlgebra basis.
using CentroidElement = Vector;

struct CentroidAlgebra {
  Format format;
  std::vector<EndoTuple> basis;  // basis[0] is the identity tuple
  /// structure[a][b][k]: basis[a] * basis[b] = sum_k structure[a][b][k] basis[k]
  std::vector<std::vector<Vector>> structure;

  int dim() const { return static_cast<int>(basis.size()); }
  const Field& field() const { return format.field(); }

  CentroidElement one() const;
  CentroidElement unit_vector(int k) const;
  EndoTuple tuple(const CentroidElement& a) const;
  /// Throws InputError if the tuple is not in the algebra.
  CentroidElement coordinates(const EndoTuple& r) const;
  bool contains(const EndoTuple& r) const;
  CentroidElement multiply(const CentroidElement& a, const CentroidElement& b) const;
  CentroidElement power(const CentroidElement& a, unsigned k) const;
  /// Canonical echelon basis of the underlying subspace (flattened tuples).
  std::vector<Vector> canonical_subspace() const;
};

/// Solves the defining linear system of the centroid. Requires a concise
/// tensor of total degree at least 3.
CentroidAlgebra compute_centroid(const SVTensor& t);

/// Recovers the centroid from the companion space of t.
CentroidAlgebra centroid_via_apolar(const SVTensor& t);

/// Builds an algebra from spanning tuples: identity first, then the echelon
/// complement, then structure constants. Throws ConsistencyError if not closed.
CentroidAlgebra algebra_from_span(const Format& f, const std::vector<Vector>& flattened_tuples);

/// Monic minimal polynomial of a inside A.
UniPoly minimal_polynomial(const CentroidElement& a, const CentroidAlgebra& alg);
/// Monic minimal polynomial of a tuple inside End(V_1) x ... x End(V_e).
UniPoly minimal_polynomial(const EndoTuple& r);

/// r o T computed through slot 1 and checked against every other slot;
/// throws ConsistencyError when the slots disagree.
SVTensor act(const EndoTuple& r, const SVTensor& t);
SVTensor act(const CentroidElement& a, const CentroidAlgebra& alg, const SVTensor& t);

/// Direct check of the defining conditions for a single tuple. Works for
/// non-concise tensors too.
bool is_in_centroid(const EndoTuple& r, const SVTensor& t);

}  // namespace svt
