// svt: centroids, direct-sum splittings and degeneration certificates of
// Segre-Veronese tensors.
//
// Exit codes: 0 success, 1 input error or failed check, 2 out of scope,
// 3 internal consistency failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "svt/errors.hpp"
#include "svt/serialize.hpp"

using namespace svt;
using svt::io::json;

namespace {

struct Options {
  std::string input;
  std::string field;
  std::optional<std::uint64_t> seed;
  bool json_out = false;
  std::string output;
  std::string element;
  std::string omega;
  std::string evaluate;
};

class CheckFailed : public Error {
 public:
  using Error::Error;
};

std::string describe(const Format& f) {
  std::ostringstream out;
  for (int j = 0; j < f.e(); ++j) {
    if (j) out << " x ";
    out << "S^" << f.degree(j) << "(F^" << f.dim(j) << ")";
  }
  out << " over " << f.field().to_string();
  return out.str();
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

SVTensor load_tensor(const Options& o) {
  std::optional<Field> field;
  if (!o.field.empty()) field = Field::parse(o.field);
  return io::tensor_from_json(io::read_file(o.input), field);
}

// A tuple file, or a single matrix for one-factor formats.
EndoTuple load_element(const std::string& path, const Format& f) {
  json j = io::read_file(path);
  EndoTuple r;
  if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && !j[0][0].is_array())
    r.mats.push_back(io::matrix_from_json(j, f.field()));
  else
    r = io::tuple_from_json(j, f.field());
  if (r.size() != f.e()) throw InputError("element has " + std::to_string(r.size()) + " matrices for " +
                                          std::to_string(f.e()) + " factors");
  for (int i = 0; i < f.e(); ++i)
    if (r.mats[i].rows() != static_cast<std::size_t>(f.dim(i)) || r.mats[i].cols() != r.mats[i].rows())
      throw InputError("matrix " + std::to_string(i + 1) + " of the element has the wrong size");
  return r;
}

EndoTuple pick_element(const SVTensor& t) {
  CentroidAlgebra alg = compute_centroid(t);
  NilpotentChoice c = choose_nilpotent(alg);
  if (!c.element) {
    if (alg.dim() == 1) throw ScopeError("the centroid is trivial; there is no nilpotent element");
    throw ScopeError("no basis element of the centroid has a single eigenvalue over " + t.field().to_string() +
                     "; split the tensor first or pass --element");
  }
  return *c.element;
}

std::vector<Scalar> parse_omega(const std::string& text, const Field& f) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item, f));
  return out;
}

void emit(const Options& o, const json& artifact, const std::string& report) {
  if (!o.output.empty()) io::write_file(o.output, artifact);
  if (o.json_out)
    std::cout << artifact.dump(2) << "\n";
  else
    std::cout << report;
}

std::string tuple_text(const EndoTuple& r) {
  std::string s;
  for (int i = 0; i < r.size(); ++i) s += "  X" + std::to_string(i + 1) + " =\n" + r.mats[i].to_string() + "\n";
  return s;
}

int cmd_analyze(const Options& o) {
  AnalysisReport r = analyze(load_tensor(o));
  std::ostringstream out;
  out << "input: " << describe(r.input.format()) << "\n";
  out << "ranks: " << join(r.ranks) << (r.concise ? " (concise)" : "") << "\n";
  if (r.notice) out << "note: " << *r.notice << "\n";
  out << "centroid dimension: " << r.centroid_dim << " (definitional and apolar routes agree)\n";
  out << "top-degree minimal generators: " << r.generator_count << "\n";
  if (r.gradient_fiber_dim) out << "gradient fiber dimension: " << *r.gradient_fiber_dim << "\n";
  out << "verdict: " << r.verdict_text << "\n";
  for (std::size_t i = 0; i < r.locals.size(); ++i) {
    const LocalAnalysis& l = r.locals[i];
    out << "summand " << i + 1 << ": " << r.split.summands[i].ambient.to_string() << "\n";
    out << "  local " << describe(l.tensor.format()) << ": " << l.tensor.to_string() << "\n";
    out << "  centroid dimension " << l.centroid_dim << ", " << l.verdict_text << "\n";
    if (l.normal_form)
      for (int k = l.normal_form->n; k >= 1; --k)
        out << "  T_" << k << " = " << l.normal_form->components[k - 1].to_string() << "\n";
    if (l.limit) out << "  limit check: " << l.limit->message << "\n";
    if (l.witness)
      out << "  at t = " << l.witness->t0.to_string() << " the family splits into " << l.witness->summands.size()
          << " concise summands\n";
    for (const auto& b : l.blocking) out << "  blocked by " << b.to_string() << "\n";
  }
  for (const auto& b : r.split.blocking) out << "blocked by " << b.to_string() << "\n";
  emit(o, io::analysis_artifact(r), out.str());
  return 0;
}

int cmd_centroid(const Options& o) {
  SVTensor t = load_tensor(o);
  CentroidAlgebra a = compute_centroid(t);
  if (centroid_via_apolar(t).canonical_subspace() != a.canonical_subspace())
    throw ConsistencyError("definitional and apolar centroids differ");
  std::ostringstream out;
  out << "input: " << describe(t.format()) << "\n";
  out << "centroid dimension: " << a.dim() << "\n";
  for (int k = 0; k < a.dim(); ++k) {
    out << "basis element " << k + 1 << " (minimal polynomial "
        << minimal_polynomial(a.unit_vector(k), a).to_string() << "):\n"
        << tuple_text(a.basis[k]);
  }
  emit(o, io::centroid_artifact(t, a), out.str());
  return 0;
}

int cmd_split(const Options& o) {
  SVTensor t = load_tensor(o);
  SplitResult r = split(t);
  std::ostringstream out;
  out << "input: " << describe(t.format()) << "\n";
  out << "centroid dimension: " << r.algebra.dim() << "\n";
  out << "verdict: " << to_string(direct_sum_verdict(r).verdict) << " (" << r.summands.size() << " summands)\n";
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    const Summand& s = r.summands[i];
    out << "summand " << i + 1 << ": " << s.ambient.to_string() << "\n";
    out << "  local " << describe(s.local.format()) << ": " << s.local.to_string() << "\n";
  }
  if (!r.complete) out << "the decomposition is not known to be finest over " << t.field().to_string() << "\n";
  for (const auto& b : r.blocking) out << "blocked by " << b.to_string() << "\n";
  emit(o, io::split_artifact(t, r), out.str());
  return 0;
}

int cmd_normal_form(const Options& o) {
  SVTensor t = load_tensor(o);
  EndoTuple l = o.element.empty() ? pick_element(t) : load_element(o.element, t.format());
  NormalForm nf = extract_components(t, l);
  std::ostringstream out;
  out << "input: " << describe(t.format()) << "\n";
  out << "nilpotency index: " << nf.n << "\n";
  for (int k = nf.n; k >= 1; --k) out << "T_" << k << " = " << nf.components[k - 1].to_string() << "\n";
  for (int k = nf.n; k >= 1; --k) out << "T_" << k << " (Jordan coordinates) = " << nf.jordan_component(k).to_string() << "\n";
  emit(o, io::normal_form_artifact(t, nf), out.str());
  return 0;
}

int cmd_degenerate(const Options& o) {
  SVTensor t = load_tensor(o);
  EndoTuple l = o.element.empty() ? pick_element(t) : load_element(o.element, t.format());
  DegenFamily fam = o.omega.empty() ? build_family(t, l) : build_family(t, l, parse_omega(o.omega, t.field()));
  LimitReport rep = verify_limit(fam, t);
  if (!rep.pass) throw ConsistencyError("limit check failed: " + rep.message);
  std::optional<SplitWitness> w;
  if (!o.evaluate.empty()) w = evaluate_and_split(fam, Scalar::parse(o.evaluate, t.field()));
  std::ostringstream out;
  out << "input: " << describe(t.format()) << "\n";
  out << "n = " << fam.n << ", omega = (";
  for (int j = 0; j < fam.n; ++j) out << (j ? ", " : "") << fam.omega[j].to_string();
  out << ")\n";
  out << "limit check: " << rep.message << "\n";
  for (int j = 0; j < fam.n; ++j) out << "piece " << j + 1 << ": " << fam.pieces[j].to_string() << "\n";
  if (w) {
    out << "at t = " << w->t0.to_string() << ":\n";
    for (std::size_t j = 0; j < w->summands.size(); ++j)
      out << "  summand " << j + 1 << (w->concise[j] ? " (concise)" : "") << ": " << w->summands[j].to_string()
          << "\n";
  }
  emit(o, io::degeneration_artifact(t, fam, rep, w), out.str());
  return 0;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

std::vector<EndoTuple> tuples_of(const json& list, const Field& f) {
  std::vector<EndoTuple> out;
  for (const auto& x : list) out.push_back(io::tuple_from_json(x, f));
  return out;
}

void check_centroid(const json& a, const SVTensor& t) {
  const Field& f = t.field();
  std::vector<Vector> flat;
  for (const auto& r : tuples_of(a.at("basis"), f)) {
    require(is_in_centroid(r, t), "a basis tuple is not in the centroid");
    flat.push_back(r.flatten());
  }
  CentroidAlgebra c = compute_centroid(t);
  require(static_cast<int>(flat.size()) == c.dim(), "basis size differs from the centroid dimension");
  require(canonical_span(f, flat, flat.empty() ? 0 : flat[0].size()) == c.canonical_subspace(),
          "basis does not span the centroid");
}

void check_split(const json& a, const SVTensor& t) {
  const Field& f = t.field();
  const Format& fmt = t.format();
  SVTensor sum(fmt);
  EndoTuple total = EndoTuple::zero(fmt);
  std::vector<EndoTuple> es;
  for (const auto& s : a.at("summands")) {
    SVTensor amb = io::tensor_from_json(s.at("ambient"));
    SVTensor loc = io::tensor_from_json(s.at("local"));
    std::vector<Matrix> bases;
    for (const auto& b : s.at("bases")) bases.push_back(io::matrix_from_json(b, f));
    require(push_forward(loc, bases) == amb, "a summand is not the image of its local tensor");
    require(is_concise(loc), "a local summand is not concise");
    EndoTuple e = io::tuple_from_json(s.at("idempotent_tuple"), f);
    require(is_in_centroid(e, t), "an idempotent is not in the centroid");
    require(e * e == e, "an idempotent is not idempotent");
    require(act(e, t) == amb, "a summand is not the image of its idempotent");
    for (const auto& g : es) require((e * g).is_zero(), "idempotents are not orthogonal");
    es.push_back(e);
    total += e;
    sum += amb;
  }
  require(sum == t, "summands do not add up to the tensor");
  if (a.at("complete").get<bool>()) {
    require(total == EndoTuple::identity(fmt), "idempotents do not sum to the identity");
    for (const auto& s : a.at("summands"))
      require(split(io::tensor_from_json(s.at("local"))).summands.size() == 1, "a summand splits further");
  }
}

std::vector<JordanData> jordan_of(const EndoTuple& l) {
  std::vector<JordanData> out;
  for (const auto& m : l.mats) out.push_back(jordan_data(m));
  return out;
}

void check_normal_form(const json& a, const SVTensor& t) {
  const Field& f = t.field();
  EndoTuple l = io::tuple_from_json(a.at("element"), f);
  require(is_in_centroid(l, t), "the element is not in the centroid");
  const int n = nilpotency_index(l);
  require(n == a.at("n").get<int>(), "nilpotency index differs");
  std::vector<JordanData> jd = jordan_of(l);
  SVTensor sum(t.format());
  int k = 1;
  for (const auto& c : a.at("components")) {
    SVTensor tk = io::tensor_from_json(c);
    require(in_layer_subspace(tk, k, jd), "T_" + std::to_string(k) + " leaves its layer subspace");
    sum += layer(tk, k, jd);
    ++k;
  }
  require(k - 1 == n, "wrong number of components");
  require(sum == t, "the layers do not reconstruct the tensor");
}

void check_degeneration(const json& a, const SVTensor& t) {
  const Field& f = t.field();
  EndoTuple l = io::tuple_from_json(a.at("element"), f);
  require(is_in_centroid(l, t), "the element is not in the centroid");
  std::vector<Scalar> omega = io::vector_from_json(a.at("omega"), f);
  PolyTensor family = io::polytensor_from_json(a.at("family"), f);
  PolyTensor pieces(t.format());
  for (const auto& p : a.at("pieces")) pieces += io::polytensor_from_json(p, f);
  require(pieces == family, "pieces do not add up to the family");
  const int n = a.at("n").get<int>();
  for (int d = 0; d < n - 1; ++d) require(family.coefficient(d).is_zero(), "the family has a term below t^(n-1)");
  require(family.coefficient(n - 1) == t, "the t^(n-1) coefficient is not the tensor");
  DegenFamily fam = build_family(t, l, omega);
  require(fam.family == family, "the family does not match its rebuilt form");
  if (a.contains("evaluation")) {
    const json& ev = a.at("evaluation");
    SplitWitness w = evaluate_and_split(fam, io::scalar_from_json(ev.at("t0"), f));
    require(io::tensor_from_json(ev.at("total")) == w.total, "the evaluated family differs");
    SVTensor sum(t.format());
    std::size_t j = 0;
    for (const auto& s : ev.at("summands")) {
      SVTensor sj = io::tensor_from_json(s);
      require(j < w.summands.size() && sj == w.summands[j], "an evaluated summand differs");
      sum += sj;
      ++j;
    }
    require(j == static_cast<std::size_t>(n), "the evaluation does not have n summands");
    require(sum == w.total, "the evaluated summands do not add up");
    for (bool c : w.concise) require(c, "an evaluated summand is not concise on its support");
  }
}

void check_analysis(const json& a, const SVTensor& t) {
  require(io::analysis_artifact(analyze(t)) == a, "re-running the analysis gives a different report");
}

int cmd_check(const Options& o) {
  json a = io::read_file(o.input);
  if (!a.is_object() || !a.contains("kind") || !a.contains("tensor")) throw InputError("not an artifact file");
  const std::string kind = a.at("kind").get<std::string>();
  SVTensor t = io::tensor_from_json(a.at("tensor"));
  if (kind == "centroid")
    check_centroid(a, t);
  else if (kind == "split")
    check_split(a, t);
  else if (kind == "normal_form")
    check_normal_form(a, t);
  else if (kind == "degeneration")
    check_degeneration(a, t);
  else if (kind == "analysis")
    check_analysis(a, t);
  else
    throw InputError("unknown artifact kind '" + kind + "'");
  std::cout << kind << " artifact verified\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centroids, direct-sum splittings and degeneration certificates of Segre-Veronese tensors"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Working field, Q or Fp:<p> (overrides the input file)");
  app.add_option("--seed", o.seed, "Seed for the randomized factorization over F_p");
  app.add_flag("--json", o.json_out, "Print the JSON artifact instead of the report");
  app.add_option("-o,--output", o.output, "Write the JSON artifact to this file");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline with a verdict");
  auto* centroid_cmd = app.add_subcommand("centroid", "Centroid algebra");
  auto* split_cmd = app.add_subcommand("split", "Finest direct-sum splitting");
  auto* nf_cmd = app.add_subcommand("normal-form", "Layered normal form for a nilpotent centroid element");
  auto* degen_cmd = app.add_subcommand("degenerate", "Degeneration family and split witness");
  auto* check_cmd = app.add_subcommand("check", "Re-verify a saved artifact");
  for (auto* c : {analyze_cmd, centroid_cmd, split_cmd, nf_cmd, degen_cmd})
    c->add_option("tensor", o.input, "Tensor JSON file")->required();
  check_cmd->add_option("artifact", o.input, "Artifact JSON file")->required();
  for (auto* c : {nf_cmd, degen_cmd})
    c->add_option("--element", o.element, "Nilpotent centroid element (JSON tuple of matrices)");
  degen_cmd->add_option("--omega", o.omega, "Distinct parameters, comma separated");
  degen_cmd->add_option("--evaluate", o.evaluate, "Evaluate the family at this t and split it");

  CLI11_PARSE(app, argc, argv);
  if (o.seed) set_factor_seed(*o.seed);

  try {
    if (*analyze_cmd) return cmd_analyze(o);
    if (*centroid_cmd) return cmd_centroid(o);
    if (*split_cmd) return cmd_split(o);
    if (*nf_cmd) return cmd_normal_form(o);
    if (*degen_cmd) return cmd_degenerate(o);
    if (*check_cmd) return cmd_check(o);
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
