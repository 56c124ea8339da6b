#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "svt/errors.hpp"
#include "svt/normalform.hpp"

using namespace svt;
using namespace svt::testing;

TEST_CASE("jordan_data examples") {
  Matrix block = Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  JordanData a = jordan_data(block);
  CHECK(a.index == 3);
  REQUIRE(a.columns.size() == 1);
  CHECK(a.columns[0].height == 3);
  CHECK(a.basis.is_identity());

  JordanData z = jordan_data(Matrix(Q, 4, 4));
  CHECK(z.index == 1);
  CHECK(z.columns.size() == 4);
  CHECK(z.partial_inverse.is_zero());
  CHECK(z.bottom_projection.is_identity());

  JordanData j = jordan_data(jordan_cubic_l());
  CHECK(j.index == 3);
  REQUIRE(j.columns.size() == 3);
  CHECK(j.columns[0].height == 3);
  CHECK(j.columns[1].height == 2);
  CHECK(j.columns[2].height == 1);
  CHECK(j.basis.is_identity());
  CHECK(j.multiplicities == std::vector<int>{0, 1, 1, 1});
  // M: x32 -> x31 -> x30, x21 -> x20.
  Matrix m(Q, 6, 6);
  m(1, 0) = m(2, 1) = m(4, 3) = Scalar::one(Q);
  CHECK(j.partial_inverse == m);

  CHECK_THROWS_AS(jordan_data(Matrix::identity(Q, 2)), InputError);
}

TEST_CASE("jordan_data invariants on random nilpotents") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto inst = nilpotent_instance(rng, Q, {1}, n, 7);
    const Matrix& l = inst.l.mats[0];
    JordanData jd = jordan_data(l);
    CHECK(jd.index == n);
    for (const auto& c : jd.columns) {
      for (int r = 0; r + 1 < c.height; ++r) {
        Matrix v = Matrix::from_columns(Q, {c.vectors[r]}, l.rows());
        CHECK(l * v == Matrix::from_columns(Q, {c.vectors[r + 1]}, l.rows()));
      }
      CHECK(is_zero_vector((l * Matrix::from_columns(Q, {c.vectors.back()}, l.rows())).column(0)));
    }
    CHECK(!determinant(jd.basis).is_zero());
    // L M is the identity on the image of L.
    CHECK(l * jd.partial_inverse * l == l);
    CHECK(jd.bottom_projection * jd.bottom_projection == jd.bottom_projection);
  }
}

TEST_CASE("jordan cubic components") {
  SVTensor t = jordan_cubic();
  NormalForm nf = extract_components(t, EndoTuple{{jordan_cubic_l()}});
  REQUIRE(nf.n == 3);
  const Format& f = t.format();
  CHECK(nf.components[2] == parse_expression(f, "x1^3"));
  CHECK(nf.components[1] == parse_expression(f, "-x1^2*x4"));
  CHECK(nf.components[0] == parse_expression(f, "x1*x4*x6"));
  CHECK(reconstruct(nf) == t);
  for (int k = 1; k <= 3; ++k) CHECK(in_layer_subspace(nf.components[k - 1], k, nf.jordan));
}

TEST_CASE("trivial and cyclic cases") {
  Format f(Q, {{3, 3}});
  SVTensor g = parse_expression(f, "x1^3 + x1*x2*x3 - 2*x3^3");
  NormalForm one = extract_components(g, EndoTuple{{Matrix(Q, 3, 3)}});
  CHECK(one.n == 1);
  CHECK(one.components[0] == g);
  CHECK(reconstruct(one) == g);

  // u -> v -> w -> 0 with u, v, w = x1, x2, x3.
  SVTensor t = parse_expression(f, "3*x3^2*x1 + 3*x3*x2^2");
  Matrix l = Matrix::from_ints(Q, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  NormalForm nf = extract_components(t, EndoTuple{{l}});
  CHECK(nf.n == 3);
  CHECK(nf.components[2] == parse_expression(f, "x3^3"));
  CHECK(nf.components[1].is_zero());
  CHECK(nf.components[0].is_zero());
  CHECK(reconstruct(nf) == t);

  CHECK_THROWS_AS(extract_components(t, EndoTuple{{Matrix::identity(Q, 3)}}), InputError);
  Matrix not_central = Matrix::from_ints(Q, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(extract_components(t, EndoTuple{{not_central}}), InputError);
}

TEST_CASE("differential-operator form") {
  // Single column x32, x31, x30 = x1, x2, x3 with L: x30 -> x31 -> x32.
  Format f(Q, {{3, 3}});
  Matrix l = Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  JordanData jd = jordan_data(l);
  Matrix d1 = jd.partial_inverse * jd.bottom_projection;
  Matrix d2 = jd.partial_inverse * jd.partial_inverse * jd.bottom_projection;
  SVTensor zero(f);
  SVTensor sum = veronese_sum({zero, zero, parse_expression(f, "x1^3")}, {d1, d2});
  CHECK(sum == parse_expression(f, "3*x1^2*x3 + 3*x1*x2^2"));

  VeroneseForm vf = veronese_form(sum, l);
  CHECK(vf.n == 3);
  CHECK(vf.components[2] == parse_expression(f, "x1^3"));
  CHECK(vf.operators == std::vector<Matrix>{d1, d2});

  // Columns (y1, x1), (y2, x2), (z) as variables x1..x5: F = G(y, z) + sum x_i dH/dy_i.
  Format g5(Q, {{5, 3}});
  Matrix l5(Q, 5, 5);
  l5(0, 1) = l5(2, 3) = Scalar::one(Q);
  SVTensor h = parse_expression(g5, "x1^2*x3 + 2*x3^3");
  SVTensor gz = parse_expression(g5, "x1*x3*x5 + x5^3 - x1^3");
  SVTensor form = gz + parse_expression(g5, "2*x1*x2*x3 + x1^2*x4 + 6*x3^2*x4");
  VeroneseForm two = veronese_form(form, l5);
  REQUIRE(two.n == 2);
  CHECK(two.components[1] == h);
  CHECK(two.components[0] == gz);
  REQUIRE(two.operators.size() == 1);
  CHECK(contract_op(h, 0, two.operators[0]) == form - gz);

  CHECK_THROWS_AS(veronese_form(two_by_two_by_two(), Matrix(Q, 2, 2)), ScopeError);
}

TEST_CASE("forward-generated round trips") {
  std::mt19937_64 rng(71);
  const std::vector<std::vector<int>> shapes{{3}, {4}, {1, 2}, {2, 2}, {1, 1, 1}};
  for (const Field& field : {Q, Field::prime(101)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto& degs = shapes[trial % shapes.size()];
      int n = 1 + static_cast<int>(rng() % 4);
      auto inst = nilpotent_instance(rng, field, degs, n, degs.size() == 3 ? 5 : 7);
      REQUIRE(is_in_centroid(inst.l, inst.t));
      NormalForm nf = extract_components(inst.t, inst.l);
      CHECK(nf.n == n);
      CHECK(reconstruct(nf) == inst.t);
      CHECK_FALSE(nf.components[n - 1].is_zero());
      for (int k = 1; k <= n; ++k) {
        CHECK(in_layer_subspace(nf.components[k - 1], k, nf.jordan));
        std::vector<Matrix> ms;
        for (const auto& jd : nf.jordan) ms.push_back(jd.partial_inverse);
        CHECK(layer(nf.components[k - 1], k, nf.jordan) == newton_layer(nf.components[k - 1], k, ms));
      }
      if (degs.size() == 1) {
        VeroneseForm vf = veronese_form(inst.t, inst.l.mats[0]);
        CHECK(veronese_sum(vf.components, vf.operators) == reconstruct(nf));
      }
    }
  }
}
