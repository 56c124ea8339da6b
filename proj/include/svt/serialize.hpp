#pragma once

// JSON encodings of tensors and of every artifact the pipeline produces.
// Scalars are strings ("3/4", or the residue for F_p); matrices are row lists.

#include <json.hpp>
#include <optional>
#include <string>

#include "svt/analysis.hpp"

namespace svt::io {

using nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& field);

json to_json(const Vector& v);
Vector vector_from_json(const json& j, const Field& field);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& field);

json to_json(const UniPoly& p);
UniPoly poly_from_json(const json& j, const Field& field);

json to_json(const EndoTuple& r);
/// Accepts {"tuple": [...]}, {"matrices": [...]} or a bare list of matrices.
EndoTuple tuple_from_json(const json& j, const Field& field);

/// {"field", "factors": [{"dim", "degree"}], "terms": [{"exps", "coeff"}], "expression"}.
json to_json(const SVTensor& t);
/// Reads "terms" if present, else "expression". A given field overrides the file's.
SVTensor tensor_from_json(const json& j, const std::optional<Field>& field = std::nullopt);

json to_json(const PolyTensor& t);
PolyTensor polytensor_from_json(const json& j, const Field& field);

json to_json(const MatrixPoly& m);

json to_json(const CentroidAlgebra& a);
json to_json(const SplitResult& r);
json to_json(const JordanData& jd);
json to_json(const NormalForm& nf);
json to_json(const VeroneseForm& vf);
json to_json(const LimitReport& r);
json to_json(const SplitWitness& w);
json to_json(const DegenFamily& fam);
json to_json(const LocalAnalysis& la);
json to_json(const AnalysisReport& r);

/// Artifacts: {"kind": ..., "tensor": ..., ...}.
json centroid_artifact(const SVTensor& t, const CentroidAlgebra& a);
json split_artifact(const SVTensor& t, const SplitResult& r);
json normal_form_artifact(const SVTensor& t, const NormalForm& nf);
json degeneration_artifact(const SVTensor& t, const DegenFamily& fam, const LimitReport& rep,
                           const std::optional<SplitWitness>& w);
json analysis_artifact(const AnalysisReport& r);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace svt::io
