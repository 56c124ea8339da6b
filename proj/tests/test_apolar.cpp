#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "svt/apolar.hpp"
#include "svt/errors.hpp"

using namespace svt;
using namespace svt::testing;

namespace {

const Format binary_cubic(Q, {{2, 3}});

SVTensor bc(const std::string& s) { return parse_expression(binary_cubic, s); }

// Derivatives of g in every slot lie in the span of those of t.
bool derivatives_contained(const SVTensor& t, const SVTensor& g) {
  for (int j = 0; j < t.format().e(); ++j) {
    Matrix ft = flattening(t, j), fg = flattening(g, j);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ft.rows(); ++i) rows.push_back(ft.row(i));
    std::size_t r = rank(Matrix::from_rows(t.field(), rows, ft.cols()));
    for (std::size_t i = 0; i < fg.rows(); ++i) rows.push_back(fg.row(i));
    if (rank(Matrix::from_rows(t.field(), rows, ft.cols())) != r) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ann_piece examples") {
  auto p = ann_piece(bc("x1^2*x2"), {2});
  REQUIRE(p.dim() == 1);
  CHECK(p.basis[0].to_string() == "y2^2");

  CHECK(ann_piece(bc("x1^2*x2"), {0}).dim() == 0);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Format f = random_concise_format(rng, Q, 3, 3, 3);
    SVTensor t = random_concise(rng, f);
    MultiDegree top;
    for (int j = 0; j < f.e(); ++j) top.push_back(f.degree(j));
    auto piece = ann_piece(t, top);
    CHECK(piece.ambient_dim - piece.dim() == 1);
  }

  auto over = ann_piece(bc("x1^3"), {4});
  CHECK(over.full);
  CHECK(over.dim() == over.ambient_dim);
}

TEST_CASE("ann_piece is an ideal") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    Format f = random_concise_format(rng, Q, 2, 3, 4);
    SVTensor t = random_concise(rng, f, 0.4);
    MultiDegree deg;
    for (int j = 0; j < f.e(); ++j) deg.push_back(static_cast<int>(rng() % (f.degree(j) + 1)));
    auto piece = ann_piece(t, deg);
    for (const auto& r : piece.basis) {
      CHECK(apolar_act(t, r).is_zero());
      int j = static_cast<int>(rng() % f.e());
      SVTensor s(Format(Q, f.with_degrees(std::vector<int>(f.e(), 0)).with_degree(j, 1).factors(), true));
      Key k(f.total_vars(), 0);
      k[f.offset(j) + static_cast<int>(rng() % f.dim(j))] = 1;
      s.add(k, Scalar(Q, 1L));
      CHECK(apolar_act(t, dual_product(r, s)).is_zero());
    }
  }
}

TEST_CASE("min_generator_count examples") {
  CHECK(min_generator_count(bc("x1^3 + x2^3"), {3}) == 1);
  CHECK(min_generator_count(parse_expression(Format(Q, {{2, 4}}), "x1^4 + x2^4"), {4}) == 1);
  CHECK(min_generator_count(bc("x1^2*x2"), {3}) == 1);
  CHECK(min_generator_count(bc("x1^3 + x2^3"), {2}) == 1);
  CHECK(min_generator_count(bc("x1^2*x2"), {2}) == 1);
  CHECK(min_generator_count(bc("x1^2*x2"), {1}) == 0);
}

TEST_CASE("companion_space examples") {
  auto c = companion_space(bc("x1^2*x2"));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == bc("x1^3"));
  CHECK(c[1] == bc("x1^2*x2"));

  CHECK(companion_space(two_by_two_by_two()).size() == 2);

  std::mt19937_64 rng(41);
  Format f333(Q, {{3, 1}, {3, 1}, {3, 1}});
  CHECK(companion_space(random_concise(rng, f333, 0.9)).size() == 1);

  CHECK_THROWS_AS(companion_space(parse_expression(Format(Q, {{3, 3}}), "x1^3 + x2^3")), NotConcise);
}

TEST_CASE("companion space dimension formula and membership") {
  std::mt19937_64 rng(43);
  for (const Field& field : {Q, Field::prime(101)}) {
    for (int trial = 0; trial < 12; ++trial) {
      Format f = random_concise_format(rng, field, 3, 3, 3);
      SVTensor t = random_concise(rng, f, trial % 3 == 0 ? 0.25 : 0.6);
      auto c = companion_space(t);
      MultiDegree top;
      for (int j = 0; j < f.e(); ++j) top.push_back(f.degree(j));
      CHECK(static_cast<int>(c.size()) == 1 + min_generator_count(t, top));
      for (const auto& g : c) CHECK(derivatives_contained(t, g));
      std::vector<Vector> span;
      for (const auto& g : c) span.push_back(g.dense());
      std::size_t r = span.size();
      span.push_back(t.dense());
      CHECK(rank(Matrix::from_rows(field, span, span[0].size())) == r);
    }
  }
}

TEST_CASE("gradient_fiber_dimension") {
  CHECK(gradient_fiber_dimension(bc("x1^3 + x2^3")) == 1);
  CHECK(gradient_fiber_dimension(bc("x1^2*x2")) == 1);
  std::mt19937_64 rng(47);
  Format ternary(Q, {{3, 3}});
  CHECK(gradient_fiber_dimension(random_concise(rng, ternary, 1.0)) == 0);
  CHECK_THROWS_AS(gradient_fiber_dimension(two_by_two_by_two()), ScopeError);
}
