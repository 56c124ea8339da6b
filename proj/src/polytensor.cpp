#include "svt/polytensor.hpp"

#include "svt/errors.hpp"
#include "svt/expand.hpp"

namespace svt {

Matrix MatrixPoly::evaluate(const Scalar& t) const {
  if (coeffs.empty()) throw InputError("empty matrix polynomial");
  Matrix r = coeffs.back();
  for (int k = degree() - 1; k >= 0; --k) {
    Matrix next = coeffs[k];
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) next(i, j) += t * r(i, j);
    r = std::move(next);
  }
  return r;
}

PolyTensor PolyTensor::from_tensor(const SVTensor& t, int shift) {
  PolyTensor out(t.format());
  for (const auto& [k, c] : t.terms()) out.terms_.emplace(k, UniPoly::monomial(c, shift));
  return out;
}

void PolyTensor::add(const Key& k, const UniPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyTensor& PolyTensor::operator+=(const PolyTensor& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

PolyTensor& PolyTensor::operator-=(const PolyTensor& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

PolyTensor& PolyTensor::operator*=(const UniPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SVTensor PolyTensor::coefficient(int k) const {
  SVTensor out(format_);
  for (const auto& [key, c] : terms_) {
    Scalar v = c.coeff(k);
    if (!v.is_zero()) out.add_unchecked(key, v);
  }
  return out;
}

SVTensor PolyTensor::evaluate(const Scalar& t) const {
  SVTensor out(format_);
  for (const auto& [key, c] : terms_) {
    Scalar v = c.eval(t);
    if (!v.is_zero()) out.add_unchecked(key, v);
  }
  return out;
}

int PolyTensor::valuation() const {
  int v = -1;
  for (const auto& [k, c] : terms_) {
    int low = 0;
    while (c.coeff(low).is_zero()) ++low;
    if (v < 0 || low < v) v = low;
  }
  return v;
}

int PolyTensor::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, c.degree());
  return d;
}

std::string PolyTensor::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    SVTensor mono(format_);
    mono.add_unchecked(k, Scalar::one(field()));
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(var) + ")*" + mono.to_string();
  }
  return out;
}

PolyTensor push_forward(const SVTensor& t, const std::vector<MatrixPoly>& r) {
  const Format& f = t.format();
  if (static_cast<int>(r.size()) != f.e()) throw InputError("one matrix polynomial per factor required");
  const Field& field = f.field();
  std::vector<int> in_dims, out_dims;
  std::vector<std::vector<std::vector<UniPoly>>> lin(f.e());
  for (int j = 0; j < f.e(); ++j) {
    if (r[j].coeffs.empty()) throw InputError("empty matrix polynomial");
    const std::size_t rows = r[j].coeffs[0].rows();
    in_dims.push_back(f.dim(j));
    out_dims.push_back(static_cast<int>(rows));
    for (int i = 0; i < f.dim(j); ++i) {
      std::vector<UniPoly> col;
      for (std::size_t k = 0; k < rows; ++k) {
        std::vector<Scalar> cs;
        for (const auto& m : r[j].coeffs) cs.push_back(m(k, i));
        col.emplace_back(field, std::move(cs));
      }
      lin[j].push_back(std::move(col));
    }
  }
  PolyTensor out(f.with_dims(out_dims));
  auto terms = detail::substitute(t.terms(), in_dims, out_dims, lin, UniPoly::constant(Scalar::one(field)));
  for (auto& [k, c] : terms) out.add(k, c);
  return out;
}

MatrixPoly geometric_series(const Matrix& m, int len) {
  MatrixPoly r;
  Matrix p = Matrix::identity(m.field(), m.rows());
  for (int k = 0; k < len; ++k) {
    r.coeffs.push_back(p);
    p = p * m;
  }
  return r;
}

}  // namespace svt
