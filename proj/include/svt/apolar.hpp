#pragma once

// Graded pieces of the apolar ideal and the companion space of a tensor.

#include <vector>

#include "svt/matrix.hpp"
#include "svt/tensor.hpp"

namespace svt {

using MultiDegree = std::vector<int>;

struct GradedPiece {
  MultiDegree degree;
  std::vector<SVTensor> basis;  // dual-ring elements of the given multidegree
  std::size_t ambient_dim = 0;  // number of dual monomials of that multidegree
  /// True when the multidegree exceeds the tensor's degrees, so everything annihilates.
  bool full = false;
  std::size_t dim() const { return basis.size(); }
};

/// Matrix of r -> r applied to t on the dual monomials of multidegree deg (columns).
Matrix catalecticant(const SVTensor& t, const MultiDegree& deg);

/// Ann(t) in multidegree deg.
GradedPiece ann_piece(const SVTensor& t, const MultiDegree& deg);

/// Minimal generators of Ann(t) living exactly in multidegree deg.
int min_generator_count(const SVTensor& t, const MultiDegree& deg);

/// Echelon basis of { G : every slot derivative of G lies in the span of those of t }.
/// Throws NotConcise for non-concise input.
std::vector<SVTensor> companion_space(const SVTensor& t);

/// Single-factor forms only: minimal generators of Ann(F) in the degree of F.
int gradient_fiber_dimension(const SVTensor& f);

}  // namespace svt
