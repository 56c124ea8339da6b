#include "svt/serialize.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "svt/errors.hpp"

namespace svt::io {

namespace {

json key_to_json(const Format& f, const Key& k) {
  json slots = json::array();
  for (int j = 0; j < f.e(); ++j)
    slots.push_back(std::vector<int>(k.begin() + f.offset(j), k.begin() + f.offset(j) + f.dim(j)));
  return slots;
}

Key key_from_json(const Format& f, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != f.e()) throw InputError("exponents need one list per factor");
  Key k;
  for (int s = 0; s < f.e(); ++s) {
    auto v = j[s].get<std::vector<int>>();
    if (static_cast<int>(v.size()) != f.dim(s)) throw InputError("exponent list has the wrong length");
    k.insert(k.end(), v.begin(), v.end());
  }
  return k;
}

json format_to_json(const Format& f) {
  json fs = json::array();
  for (const auto& fac : f.factors()) fs.push_back({{"dim", fac.dim}, {"degree", fac.degree}});
  return fs;
}

Format format_from_json(const json& j, const Field& field, bool dual) {
  std::vector<Factor> fs;
  for (const auto& x : j) fs.push_back({x.at("dim").get<int>(), x.at("degree").get<int>()});
  if (fs.empty()) throw InputError("a tensor needs at least one factor");
  return Format(field, fs, dual);
}

// Residues print as "(k mod p)"; the expression keeps only k so it parses back.
std::string expression(const SVTensor& t) {
  static const std::regex paren("\\(([0-9]+) mod [0-9]+\\)"), bare(" mod [0-9]+");
  return std::regex_replace(std::regex_replace(t.to_string(), paren, "$1"), bare, "");
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

json to_json(const Scalar& s) { return s.is_rational() ? s.to_string() : std::to_string(s.residue()); }

Scalar scalar_from_json(const json& j, const Field& field) {
  if (j.is_number_integer()) return Scalar(field, j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
  throw InputError("scalars must be strings or integers, got " + j.dump());
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw InputError("expected a list of scalars");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, field));
  return v;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const json& j, const Field& field) {
  return guarded([&] {
    if (!j.is_array() || j.empty()) throw InputError("a matrix is a nonempty list of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r, field));
    for (const auto& r : rows)
      if (r.size() != rows[0].size()) throw InputError("matrix rows have different lengths");
    return Matrix::from_rows(field, rows, rows[0].size());
  });
}

json to_json(const UniPoly& p) { return {{"coefficients", to_json(p.coeffs())}, {"text", p.to_string()}}; }

UniPoly poly_from_json(const json& j, const Field& field) {
  return guarded([&] { return UniPoly(field, vector_from_json(j.at("coefficients"), field)); });
}

json to_json(const EndoTuple& r) {
  json out = json::array();
  for (const auto& m : r.mats) out.push_back(to_json(m));
  return out;
}

EndoTuple tuple_from_json(const json& j, const Field& field) {
  return guarded([&] {
    const json* list = &j;
    if (j.is_object()) list = j.contains("tuple") ? &j.at("tuple") : &j.at("matrices");
    EndoTuple r;
    for (const auto& m : *list) r.mats.push_back(matrix_from_json(m, field));
    if (r.mats.empty()) throw InputError("empty tuple");
    return r;
  });
}

json to_json(const SVTensor& t) {
  const Format& f = t.format();
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) terms.push_back({{"exps", key_to_json(f, k)}, {"coeff", to_json(c)}});
  json out = {{"field", f.field().to_string()}, {"factors", format_to_json(f)}, {"terms", terms},
              {"expression", expression(t)}};
  if (f.dual()) out["dual"] = true;
  return out;
}

SVTensor tensor_from_json(const json& j, const std::optional<Field>& field) {
  return guarded([&] {
    if (!j.is_object()) throw InputError("a tensor is a JSON object");
    Field fld = field ? *field : j.contains("field") ? Field::parse(j.at("field").get<std::string>()) : Field::rationals();
    Format f = format_from_json(j.at("factors"), fld, j.value("dual", false));
    if (j.contains("terms")) {
      SVTensor t(f);
      for (const auto& term : j.at("terms")) {
        const json& e = term.contains("exps") ? term.at("exps") : term.at("exponents");
        t.add(key_from_json(f, e), scalar_from_json(term.at("coeff"), fld));
      }
      return t;
    }
    if (j.contains("expression")) return parse_expression(f, j.at("expression").get<std::string>());
    throw InputError("a tensor needs \"terms\" or \"expression\"");
  });
}

json to_json(const PolyTensor& t) {
  const Format& f = t.format();
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) terms.push_back({{"exps", key_to_json(f, k)}, {"coeff", to_json(c.coeffs())}});
  return {{"field", f.field().to_string()}, {"factors", format_to_json(f)}, {"terms", terms}};
}

PolyTensor polytensor_from_json(const json& j, const Field& field) {
  return guarded([&] {
    PolyTensor t(format_from_json(j.at("factors"), field, false));
    for (const auto& term : j.at("terms"))
      t.add(key_from_json(t.format(), term.at("exps")), UniPoly(field, vector_from_json(term.at("coeff"), field)));
    return t;
  });
}

json to_json(const MatrixPoly& m) {
  json out = json::array();
  for (const auto& c : m.coeffs) out.push_back(to_json(c));
  return out;
}

json to_json(const CentroidAlgebra& a) {
  json basis = json::array(), minpolys = json::array(), structure = json::array();
  for (int k = 0; k < a.dim(); ++k) {
    basis.push_back(to_json(a.basis[k]));
    minpolys.push_back(minimal_polynomial(a.unit_vector(k), a).to_string());
  }
  for (const auto& row : a.structure) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    structure.push_back(r);
  }
  return {{"dimension", a.dim()}, {"basis", basis}, {"structure", structure}, {"minimal_polynomials", minpolys}};
}

json to_json(const SplitResult& r) {
  json summands = json::array(), blocking = json::array();
  for (const auto& s : r.summands) {
    json bases = json::array();
    for (const auto& b : s.bases) bases.push_back(to_json(b));
    summands.push_back({{"idempotent", to_json(s.idempotent)},
                        {"idempotent_tuple", to_json(r.algebra.tuple(s.idempotent))},
                        {"bases", bases},
                        {"ambient", to_json(s.ambient)},
                        {"local", to_json(s.local)},
                        {"centroid_dimension", s.centroid_dim}});
  }
  for (const auto& b : r.blocking) blocking.push_back(b.to_string());
  DirectSumAnswer v = direct_sum_verdict(r);
  return {{"centroid", to_json(r.algebra)}, {"complete", r.complete}, {"blocking", blocking},
          {"verdict", to_string(v.verdict)}, {"summands", summands}};
}

json to_json(const JordanData& jd) {
  json labels = json::array();
  for (const auto& [q, r] : jd.labels) labels.push_back({q, r});
  return {{"index", jd.index},
          {"basis", to_json(jd.basis)},
          {"labels", labels},
          {"multiplicities", jd.multiplicities},
          {"partial_inverse", to_json(jd.partial_inverse)}};
}

json to_json(const NormalForm& nf) {
  json jordan = json::array(), comps = json::array(), local = json::array();
  for (const auto& jd : nf.jordan) jordan.push_back(to_json(jd));
  for (int k = 1; k <= nf.n; ++k) {
    comps.push_back(to_json(nf.components[k - 1]));
    local.push_back(to_json(nf.jordan_component(k)));
  }
  return {{"n", nf.n}, {"element", to_json(nf.nilpotent)}, {"jordan", jordan}, {"components", comps},
          {"jordan_components", local}};
}

json to_json(const VeroneseForm& vf) {
  json comps = json::array(), ops = json::array();
  for (const auto& c : vf.components) comps.push_back(to_json(c));
  for (const auto& d : vf.operators) ops.push_back(to_json(d));
  return {{"n", vf.n}, {"components", comps}, {"operators", ops}};
}

json to_json(const LimitReport& r) {
  json out = {{"pass", r.pass}, {"valuation", r.valuation}, {"message", r.message}};
  if (!r.pass) {
    out["bad_degree"] = r.bad_degree;
    out["discrepancy"] = to_json(r.discrepancy);
  }
  return out;
}

json to_json(const SplitWitness& w) {
  json summands = json::array(), bases = json::array(), local = json::array();
  for (std::size_t j = 0; j < w.summands.size(); ++j) {
    summands.push_back(to_json(w.summands[j]));
    local.push_back(to_json(w.local[j]));
    json b = json::array();
    for (const auto& m : w.bases[j]) b.push_back(to_json(m));
    bases.push_back(b);
  }
  return {{"t0", to_json(w.t0)}, {"total", to_json(w.total)}, {"summands", summands},
          {"bases", bases},      {"local", local},            {"concise", w.concise}};
}

json to_json(const DegenFamily& fam) {
  json alpha = json::array(), pieces = json::array(), witness = json::array();
  for (const auto& row : fam.alpha) alpha.push_back(to_json(row));
  for (const auto& p : fam.pieces) pieces.push_back(to_json(p));
  for (const auto& group : fam.witness) {
    json g = json::array();
    for (const auto& m : group) g.push_back(to_json(m));
    witness.push_back(g);
  }
  return {{"n", fam.n},
          {"omega", to_json(fam.omega)},
          {"alpha", alpha},
          {"element", to_json(fam.normal_form.nilpotent)},
          {"components", to_json(fam.normal_form)["components"]},
          {"family", to_json(fam.family)},
          {"pieces", pieces},
          {"witness", witness}};
}

json to_json(const LocalAnalysis& la) {
  json out = {{"tensor", to_json(la.tensor)},
              {"centroid_dimension", la.centroid_dim},
              {"verdict", verdict_name(la.verdict)},
              {"verdict_text", la.verdict_text}};
  if (la.element) {
    out["nilpotency_index"] = la.nilpotency;
    out["element"] = to_json(*la.element);
  }
  if (la.normal_form) out["normal_form"] = to_json(*la.normal_form);
  if (la.family) out["degeneration"] = to_json(*la.family);
  if (la.limit) out["limit"] = to_json(*la.limit);
  if (la.witness) out["witness"] = to_json(*la.witness);
  if (!la.blocking.empty()) {
    json b = json::array();
    for (const auto& p : la.blocking) b.push_back(p.to_string());
    out["blocking"] = b;
  }
  return out;
}

json to_json(const AnalysisReport& r) {
  json locals = json::array(), reduction = json::array();
  for (const auto& l : r.locals) locals.push_back(to_json(l));
  for (const auto& b : r.reduction) reduction.push_back(to_json(b));
  json out = {{"ranks", r.ranks},
              {"concise", r.concise},
              {"analyzed", to_json(r.tensor)},
              {"reduction", reduction},
              {"centroid_dimension", r.centroid_dim},
              {"centroid_routes_agree", r.routes_agree},
              {"generator_count", r.generator_count},
              {"verdict", verdict_name(r.verdict)},
              {"verdict_text", r.verdict_text},
              {"split", to_json(r.split)},
              {"summands", locals}};
  if (r.notice) out["notice"] = *r.notice;
  if (r.gradient_fiber_dim) out["gradient_fiber_dimension"] = *r.gradient_fiber_dim;
  return out;
}

json centroid_artifact(const SVTensor& t, const CentroidAlgebra& a) {
  json out = to_json(a);
  out["kind"] = "centroid";
  out["tensor"] = to_json(t);
  return out;
}

json split_artifact(const SVTensor& t, const SplitResult& r) {
  json out = to_json(r);
  out["kind"] = "split";
  out["tensor"] = to_json(t);
  return out;
}

json normal_form_artifact(const SVTensor& t, const NormalForm& nf) {
  json out = to_json(nf);
  out["kind"] = "normal_form";
  out["tensor"] = to_json(t);
  if (t.format().e() == 1) {
    const JordanData& jd = nf.jordan[0];
    json ops = json::array();
    Matrix mi = jd.partial_inverse;
    for (int i = 1; i < nf.n; ++i) {
      ops.push_back(to_json(mi * jd.bottom_projection));
      mi = mi * jd.partial_inverse;
    }
    out["operators"] = ops;
  }
  return out;
}

json degeneration_artifact(const SVTensor& t, const DegenFamily& fam, const LimitReport& rep,
                           const std::optional<SplitWitness>& w) {
  json out = to_json(fam);
  out["kind"] = "degeneration";
  out["tensor"] = to_json(t);
  out["limit"] = to_json(rep);
  if (w) out["evaluation"] = to_json(*w);
  return out;
}

json analysis_artifact(const AnalysisReport& r) {
  json out = to_json(r);
  out["kind"] = "analysis";
  out["tensor"] = to_json(r.input);
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace svt::io
