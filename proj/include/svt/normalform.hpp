#pragma once

// Jordan data of nilpotent centroid elements and the layered normal form
// T = sum_k sum_{|delta| = k-1} M^delta o T_k.

#include <utility>
#include <vector>

#include "svt/centroid.hpp"

namespace svt {

struct JordanColumn {
  int height = 0;
  std::vector<Vector> vectors;  // vectors[r] = x^{(q,r)}; L maps r to r + 1
};

struct JordanData {
  Matrix l;
  int index = 0;                     // nilpotency index
  std::vector<JordanColumn> columns; // heights non-increasing
  /// Columns are the Jordan basis: column by column, x^{(q,q-1)} first.
  Matrix basis;
  std::vector<std::pair<int, int>> labels;  // (q, r) of each basis vector
  Matrix partial_inverse;                   // x^{(q,r+1)} -> x^{(q,r)}, tops -> 0
  Matrix bottom_projection;                 // onto span of the x^{(q,q-1)}
  /// multiplicities[q] = number of columns of height q.
  std::vector<int> multiplicities;
};

/// Throws InputError if l is not nilpotent.
JordanData jordan_data(const Matrix& l);

struct NormalForm {
  int n = 1;
  EndoTuple nilpotent;
  std::vector<JordanData> jordan;     // per slot
  std::vector<SVTensor> components;   // components[k - 1] = T_k, ambient coordinates

  /// T_k in the Jordan coordinates of every slot.
  SVTensor jordan_component(int k) const;
};

/// Nilpotency index of a tuple (its minimal polynomial is x^n); throws
/// InputError if the tuple is not nilpotent.
int nilpotency_index(const EndoTuple& l);

/// Peels off T_n, ..., T_1. The tuple must be a nilpotent element of the
/// centroid; conciseness is not required.
NormalForm extract_components(const SVTensor& t, const EndoTuple& l);
NormalForm extract_components(const SVTensor& t, const CentroidElement& a, const CentroidAlgebra& alg);

/// sum_{|delta| = k-1} M_1^{delta_1} o_1 ... M_e^{delta_e} o_e T_k.
SVTensor layer(const SVTensor& tk, int k, const std::vector<JordanData>& jordan);

/// True if T_k lies in the tensor product of L_j^{k-1}(Ker L_j^k).
bool in_layer_subspace(const SVTensor& tk, int k, const std::vector<JordanData>& jordan);

SVTensor reconstruct(const NormalForm& nf);

struct VeroneseForm {
  int n = 1;
  JordanData jordan;
  std::vector<SVTensor> components;  // F_1, ..., F_n
  std::vector<Matrix> operators;     // D_1, ..., D_{n-1}; D_i = M^i on bottoms, 0 elsewhere
};

/// Single-factor forms only.
VeroneseForm veronese_form(const SVTensor& f, const Matrix& l);
VeroneseForm veronese_form(const SVTensor& f, const CentroidElement& a, const CentroidAlgebra& alg);

/// sum_k sum_{nu_1 + 2 nu_2 + ... = k-1} prod_i D_i^{nu_i} / nu_i! applied to F_k.
SVTensor veronese_sum(const std::vector<SVTensor>& components, const std::vector<Matrix>& operators);

}  // namespace svt
