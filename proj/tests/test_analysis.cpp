#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "svt/analysis.hpp"
#include "svt/errors.hpp"

using namespace svt;
using namespace svt::testing;

TEST_CASE("2x2x2 example is a direct sum") {
  AnalysisReport r = analyze(two_by_two_by_two());
  CHECK(r.verdict == Verdict::direct_sum);
  CHECK(r.verdict_text == "direct sum (2 summands)");
  CHECK(r.concise);
  CHECK_FALSE(r.notice);
  CHECK(r.centroid_dim == 2);
  CHECK(r.routes_agree);
  REQUIRE(r.locals.size() == 2);
  for (const auto& l : r.locals) CHECK(l.verdict == Verdict::trivial_centroid);
}

TEST_CASE("x1^2*x2 is a limit of two-fold direct sums") {
  SVTensor t = parse_expression(Format(Q, {{2, 3}}), "x1^2*x2");
  AnalysisReport r = analyze(t);
  CHECK(r.verdict == Verdict::limit_of_direct_sums);
  CHECK(r.verdict_text == "limit of 2-fold direct sums");
  CHECK(r.centroid_dim == 2);
  REQUIRE(r.gradient_fiber_dim);
  REQUIRE(r.locals.size() == 1);
  const LocalAnalysis& l = r.locals[0];
  CHECK(l.nilpotency == 2);
  REQUIRE(l.limit);
  CHECK(l.limit->pass);
  REQUIRE(l.witness);
  CHECK(l.witness->summands.size() == 2);
  REQUIRE(l.element);
  CHECK(is_in_centroid(*l.element, t));
}

TEST_CASE("generic 3x3x3 tensor has trivial centroid") {
  std::mt19937_64 rng(53);
  SVTensor t = random_concise(rng, Format(Q, {{3, 1}, {3, 1}, {3, 1}}), 0.9);
  AnalysisReport r = analyze(t);
  CHECK(r.verdict == Verdict::trivial_centroid);
  CHECK(r.verdict_text == "trivial centroid");
  CHECK_FALSE(r.gradient_fiber_dim);
}

TEST_CASE("irreducible quadratic leaves the verdict open over Q") {
  SVTensor t = parse_expression(Format(Q, {{2, 3}}), "x1^3 + 6*x1*x2^2");
  AnalysisReport r = analyze(t);
  CHECK(r.verdict == Verdict::undetermined);
  CHECK(r.verdict_text == "undetermined over Q");
  REQUIRE(r.split.blocking.size() == 1);
  CHECK(r.split.blocking[0].to_string() == UniPoly(Q, {Scalar(Q, -2L), Scalar(Q, 0L), Scalar(Q, 1L)}).monic().to_string());

  Field f7 = Field::prime(7);
  AnalysisReport r7 = analyze(parse_expression(Format(f7, {{2, 3}}), "x1^3 + 6*x1*x2^2"));
  CHECK(r7.verdict == Verdict::direct_sum);
}

TEST_CASE("non-concise input is reduced first") {
  AnalysisReport r = analyze(jordan_cubic());
  CHECK_FALSE(r.concise);
  REQUIRE(r.notice);
  CHECK(r.notice->find("not concise") != std::string::npos);
  CHECK(r.ranks == std::vector<int>{5});
  CHECK(r.tensor.format().dim(0) == 5);
  CHECK(is_concise(r.tensor));
  CHECK(r.verdict == Verdict::limit_of_direct_sums);
}

TEST_CASE("out-of-scope input") {
  CHECK_THROWS_AS(analyze(parse_expression(Format(Q, {{2, 2}}), "x1^2 + x2^2")), ScopeError);
  CHECK_THROWS_AS(analyze(SVTensor(Format(Q, {{2, 3}}))), ZeroTensor);
  Format f(Q, {{2, 1}, {2, 0}, {2, 1}});
  CHECK_THROWS_AS(analyze(SVTensor(f)), InputError);
}
