#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "svt/errors.hpp"
#include "svt/serialize.hpp"

using namespace svt;
using namespace svt::testing;
using svt::io::json;

TEST_CASE("tensor round trip") {
  std::mt19937_64 rng(97);
  for (const Field& field : {Q, Field::prime(101), Field::prime(65537)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Format f = random_format(rng, field, 3, 3, 3);
      SVTensor t = random_tensor(rng, f, 0.5);
      json j = io::to_json(t);
      CHECK(io::tensor_from_json(j) == t);
      CHECK(io::tensor_from_json(json::parse(j.dump())) == t);
      json e = j;
      e.erase("terms");
      CHECK(io::tensor_from_json(e) == t);
    }
  }
}

TEST_CASE("tensor input forms") {
  json j = json::parse(R"({"field":"Q","factors":[{"dim":2,"degree":3}],"expression":"x1^2*x2 - 1/3*x2^3"})");
  SVTensor t = io::tensor_from_json(j);
  CHECK(t == parse_expression(Format(Q, {{2, 3}}), "x1^2*x2 - 1/3*x2^3"));
  json k = json::parse(R"({"factors":[{"dim":2,"degree":3}],"terms":[{"exps":[[2,1]],"coeff":3},{"exponents":[[0,3]],"coeff":"-1/2"}]})");
  CHECK(io::tensor_from_json(k) == parse_expression(Format(Q, {{2, 3}}), "3*x1^2*x2 - 1/2*x2^3"));
  Field f7 = Field::prime(7);
  CHECK(io::tensor_from_json(k, f7).field() == f7);
  CHECK(io::tensor_from_json(k, f7) == parse_expression(Format(f7, {{2, 3}}), "3*x1^2*x2 - 1/2*x2^3"));

  CHECK_THROWS_AS(io::tensor_from_json(json::parse(R"({"factors":[{"dim":2,"degree":3}]})")), InputError);
  CHECK_THROWS_AS(io::tensor_from_json(json::parse(R"({"factors":[{"dim":2}],"expression":"x1"})")), InputError);
  CHECK_THROWS_AS(io::tensor_from_json(json::parse(R"({"factors":[{"dim":2,"degree":1}],"terms":[{"exps":[[1]],"coeff":1}]})")),
                  InputError);
  CHECK_THROWS_AS(io::tensor_from_json(json::parse(R"([1,2])")), InputError);
}

TEST_CASE("matrix, tuple and polynomial round trips") {
  std::mt19937_64 rng(101);
  for (const Field& field : {Q, Field::prime(101)}) {
    Matrix m = random_matrix(rng, field, 3, 4);
    CHECK(io::matrix_from_json(io::to_json(m), field) == m);
    EndoTuple r{{random_matrix(rng, field, 2, 2), random_matrix(rng, field, 3, 3)}};
    CHECK(io::tuple_from_json(io::to_json(r), field) == r);
    CHECK(io::tuple_from_json(json{{"tuple", io::to_json(r)}}, field) == r);
    CHECK(io::tuple_from_json(json{{"matrices", io::to_json(r)}}, field) == r);
    UniPoly p(field, random_vector(rng, field, 4));
    CHECK(io::poly_from_json(io::to_json(p), field) == p);
  }
  CHECK(io::matrix_from_json(json::parse(R"([["1/2", 0], [3, "-4"]])"), Q) ==
        Matrix::from_rows(Q, {{Scalar(Q, mpq_class(1, 2)), Scalar(Q, 0L)}, {Scalar(Q, 3L), Scalar(Q, -4L)}}, 2));
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([[1, 2], [3]])"), Q), InputError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([[1, true]])"), Q), InputError);
}

TEST_CASE("polynomial tensor round trip") {
  SVTensor t = jordan_cubic();
  Matrix l = jordan_cubic_l();
  PolyTensor p = push_forward(t, {geometric_series(l, 3)});
  CHECK(io::polytensor_from_json(io::to_json(p), Q) == p);
}

TEST_CASE("artifacts carry their kind and input") {
  SVTensor t = two_by_two_by_two();
  json a = io::split_artifact(t, split(t));
  CHECK(a["kind"] == "split");
  CHECK(io::tensor_from_json(a["tensor"]) == t);
  CHECK(a["summands"].size() == 2);
  CHECK(a["verdict"] == "direct sum");
  json c = io::centroid_artifact(t, compute_centroid(t));
  CHECK(c["dimension"] == 2);
  json r = io::analysis_artifact(analyze(jordan_cubic()));
  CHECK(r["kind"] == "analysis");
  CHECK(r["concise"] == false);
  CHECK(r["verdict"] == "limit_of_direct_sums");
}
