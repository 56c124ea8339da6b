#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "svt/apolar.hpp"
#include "svt/centroid.hpp"
#include "svt/errors.hpp"

using namespace svt;
using namespace svt::testing;

namespace {

void check_algebra_axioms(const CentroidAlgebra& a, const SVTensor& t) {
  const int d = a.dim();
  CHECK(a.basis[0] == EndoTuple::identity(a.format));
  for (int i = 0; i < d; ++i) {
    CHECK(a.multiply(a.one(), a.unit_vector(i)) == a.unit_vector(i));
    for (int j = 0; j < d; ++j) {
      CHECK(a.structure[i][j] == a.structure[j][i]);
      CHECK(a.tuple(a.multiply(a.unit_vector(i), a.unit_vector(j))) == a.basis[i] * a.basis[j]);
    }
    CHECK(is_in_centroid(a.basis[i], t));
    CHECK_FALSE(act(a.basis[i], t).is_zero());
  }
  // Slot projections are injective and share minimal polynomials.
  for (int j = 0; j < a.format.e(); ++j) {
    std::vector<Vector> proj;
    for (const auto& b : a.basis) {
      EndoTuple single;
      single.mats.push_back(b.mats[j]);
      proj.push_back(single.flatten());
    }
    CHECK(rank(Matrix::from_rows(a.field(), proj, proj[0].size())) == static_cast<std::size_t>(d));
  }
}

}  // namespace

TEST_CASE("centroid of the 2x2x2 example") {
  SVTensor t = two_by_two_by_two();
  for (const auto& alg : {compute_centroid(t), centroid_via_apolar(t)}) {
    REQUIRE(alg.dim() == 2);
    Matrix s = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
    CHECK(alg.basis[1] == EndoTuple{{s, s, s}});
    CHECK(minimal_polynomial(alg.one(), alg).to_string() == "x - 1");
    CHECK(minimal_polynomial(alg.unit_vector(1), alg).to_string() == "x^2 - 1");
    check_algebra_axioms(alg, t);
  }
}

TEST_CASE("centroid of x1^2*x2") {
  Format f(Q, {{2, 3}});
  SVTensor t = parse_expression(f, "x1^2*x2");
  CentroidAlgebra a = compute_centroid(t);
  REQUIRE(a.dim() == 2);
  CHECK(a.basis[1].mats[0] == Matrix::from_ints(Q, {{0, 1}, {0, 0}}));
  CHECK(minimal_polynomial(a.unit_vector(1), a).to_string() == "x^2");
  CHECK(a.dim() == 1 + min_generator_count(t, {3}));

  CentroidAlgebra b = centroid_via_apolar(t);
  CHECK(b.canonical_subspace() == a.canonical_subspace());
  // The element sending T to x1^3.
  EndoTuple r{{Matrix::from_ints(Q, {{0, 3}, {0, 0}})}};
  CHECK(act(r, t) == parse_expression(f, "x1^3"));
  CHECK(act(a.one(), a, t) == t);
}

TEST_CASE("centroid of a generic 3x3x3 tensor is trivial") {
  std::mt19937_64 rng(53);
  Format f(Q, {{3, 1}, {3, 1}, {3, 1}});
  SVTensor t = random_concise(rng, f, 0.9);
  CHECK(compute_centroid(t).dim() == 1);
  CHECK(centroid_via_apolar(t).dim() == 1);
}

TEST_CASE("jordan cubic contains (L, L, L) with minimal polynomial x^3") {
  SVTensor t = jordan_cubic();
  // d/dx3 + 3 d/dx5 annihilates this cubic.
  CHECK_FALSE(is_concise(t));
  CHECK_THROWS_AS(compute_centroid(t), NotConcise);
  EndoTuple l{{jordan_cubic_l()}};
  CHECK(is_in_centroid(l, t));
  CHECK(minimal_polynomial(l).to_string() == "x^3");
  // L^2 o T is the top component.
  CHECK(act(l * l, t) == parse_expression(t.format(), "x1^3"));

  // As a symmetric tensor in V (x) V (x) V the tuple is (L, L, L).
  SVTensor p = polarize(t);
  EndoTuple lll{{jordan_cubic_l(), jordan_cubic_l(), jordan_cubic_l()}};
  CHECK(is_in_centroid(lll, p));
}

TEST_CASE("scope errors") {
  Format f(Q, {{2, 2}});
  CHECK_THROWS_AS(compute_centroid(parse_expression(f, "x1*x2")), ScopeError);
  Format g(Q, {{3, 3}});
  CHECK_THROWS_AS(compute_centroid(parse_expression(g, "x1^3 + x2^3")), NotConcise);
  CHECK_THROWS_AS(centroid_via_apolar(parse_expression(g, "x1^3 + x2^3")), NotConcise);
  CHECK_THROWS_AS(compute_centroid(SVTensor(g)), ZeroTensor);
  Format m(Q, {{2, 1}, {2, 1}});
  CHECK_THROWS_AS(compute_centroid(parse_expression(m, "a1*b1 + a2*b2")), ScopeError);
}

TEST_CASE("non-centroid tuples are detected") {
  SVTensor t = two_by_two_by_two();
  Matrix s = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  Matrix i = Matrix::identity(Q, 2);
  CHECK_FALSE(is_in_centroid(EndoTuple{{s, i, i}}, t));
  CHECK_THROWS_AS(act(EndoTuple{{s, i, i}}, t), ConsistencyError);
}

TEST_CASE("both routes agree and satisfy the dimension formula") {
  std::mt19937_64 rng(59);
  for (const Field& field : {Q, Field::prime(101)}) {
    for (int trial = 0; trial < 12; ++trial) {
      Format f = random_concise_format(rng, field, 3, 3, 3, 3);
      SVTensor t = random_concise(rng, f, trial % 2 ? 0.3 : 0.7);
      CentroidAlgebra a = compute_centroid(t);
      CentroidAlgebra b = centroid_via_apolar(t);
      CHECK(a.canonical_subspace() == b.canonical_subspace());
      MultiDegree top;
      for (int j = 0; j < f.e(); ++j) top.push_back(f.degree(j));
      CHECK(a.dim() == 1 + min_generator_count(t, top));
      check_algebra_axioms(a, t);
    }
  }
}

TEST_CASE("symmetric tensors have equal slot matrices") {
  Format f(Q, {{3, 3}});
  for (const char* s : {"x1^3 + x2^3 + x3^3", "x1^2*x2 + x3^3", "x1^2*x3 + x1*x2^2"}) {
    SVTensor form = parse_expression(f, s);
    SVTensor p = polarize(form);
    CentroidAlgebra seg = compute_centroid(p);
    CentroidAlgebra ver = compute_centroid(form);
    CHECK(seg.dim() == ver.dim());
    for (const auto& b : seg.basis)
      for (int j = 1; j < p.format().e(); ++j) CHECK(b.mats[j] == b.mats[0]);
  }
}
