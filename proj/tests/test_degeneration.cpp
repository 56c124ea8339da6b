#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "svt/degeneration.hpp"
#include "svt/errors.hpp"
#include "svt/splitter.hpp"

using namespace svt;
using namespace svt::testing;

namespace {

Scalar q(long a, long b = 1) { return Scalar(Q, mpq_class(a, b)); }

std::vector<Scalar> qs(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.push_back(q(x));
  return out;
}

Vector vec(const std::vector<Scalar>& xs) { return xs; }

// Product of linear forms given as coefficient vectors over x1..x6.
SVTensor forms(const Format& f, std::vector<Vector> ls) { return product_of_forms(f, {std::move(ls)}); }

}  // namespace

TEST_CASE("vandermonde coefficients") {
  CHECK(vandermonde_coefficients(qs({1})) == qs({1}));
  CHECK(vandermonde_coefficients(qs({1, 0})) == qs({1, -1}));
  CHECK(vandermonde_coefficients(std::vector<Scalar>{q(1), q(0), q(-1)}) ==
        std::vector<Scalar>{q(1, 2), q(-1), q(1, 2)});
  CHECK_THROWS_AS(vandermonde_coefficients(qs({1, 1})), InputError);

  std::mt19937_64 rng(73);
  for (const Field& field : {Q, Field::prime(101)}) {
    for (int k = 1; k <= 5; ++k) {
      auto omega = default_omegas(field, k);
      auto alpha = vandermonde_coefficients(omega);
      for (int g = 1; g <= k; ++g) {
        Scalar s = Scalar::zero(field);
        for (int j = 0; j < k; ++j) s += alpha[j] * omega[j].pow(g - 1);
        CHECK(s == (g == k ? Scalar::one(field) : Scalar::zero(field)));
      }
    }
  }
  CHECK(default_omegas(Q, 5) == qs({0, 1, -1, 2, -2}));
  CHECK_THROWS_AS(default_omegas(Field::prime(3), 4), CharacteristicTooSmall);
}

TEST_CASE("jordan cubic family") {
  SVTensor t = jordan_cubic();
  DegenFamily fam = build_family(t, EndoTuple{{jordan_cubic_l()}}, qs({1, 0, -1}));
  CHECK(fam.alpha[2] == std::vector<Scalar>{q(1, 2), q(-1), q(1, 2)});
  LimitReport rep = verify_limit(fam, t);
  CHECK(rep.pass);
  CHECK(rep.valuation == 2);
  CHECK(fam.family.coefficient(2) == t);
  CHECK(fam.family.degree() <= 2 * 3 + 3);

  // The three pieces against the closed forms, at more points than their t-degree.
  const Format& f = t.format();
  for (long s = 1; s <= 10; ++s) {
    Scalar ts = q(s);
    Vector x32 = vec({q(1), ts, ts * ts, q(0), q(0), q(0)});
    Vector x32m = vec({q(1), -ts, ts * ts, q(0), q(0), q(0)});
    Vector x21 = vec({q(0), q(0), q(0), q(1), ts, q(0)});
    Vector x10 = vec({q(0), q(0), q(0), q(0), q(0), q(1)});
    Vector e32 = vec({q(1), q(0), q(0), q(0), q(0), q(0)});
    Vector e21 = vec({q(0), q(0), q(0), q(1), q(0), q(0)});
    SVTensor t1 = forms(f, {x10, x21, x32}) * (ts * ts) - forms(f, {x21, x32, x32}) * ts +
                  forms(f, {x32, x32, x32}) * q(1, 2);
    SVTensor t2 = forms(f, {e21, e32, e32}) * ts - forms(f, {e32, e32, e32});
    SVTensor t3 = forms(f, {x32m, x32m, x32m}) * q(1, 2);
    CHECK(fam.pieces[0].evaluate(ts) == t1);
    CHECK(fam.pieces[1].evaluate(ts) == t2);
    CHECK(fam.pieces[2].evaluate(ts) == t3);
    // A +1/2 x32^3 in the middle piece would leave a nonzero constant term.
    CHECK_FALSE(fam.pieces[1].evaluate(ts) == forms(f, {e21, e32, e32}) * ts + forms(f, {e32, e32, e32}) * q(1, 2));
  }

  SplitWitness w = evaluate_and_split(fam, q(1));
  REQUIRE(w.summands.size() == 3);
  CHECK(w.concise == std::vector<bool>{true, true, true});
  CHECK(w.local[0].format().dim(0) == 3);
  CHECK(w.local[1].format().dim(0) == 2);
  CHECK(w.local[2].format().dim(0) == 1);
  CHECK_THROWS_AS(evaluate_and_split(fam, q(0)), DegenerateParameter);
}

TEST_CASE("corrupted coefficients are caught") {
  SVTensor t = jordan_cubic();
  NormalForm nf = extract_components(t, EndoTuple{{jordan_cubic_l()}});
  auto omega = qs({1, 0, -1});
  std::vector<std::vector<Scalar>> alpha{qs({1}), qs({1, -1}), {q(1, 2), q(-1), q(1, 2)}};
  CHECK(verify_limit(assemble_family(nf, omega, alpha), t).pass);
  alpha[2][0] += q(1);
  LimitReport rep = verify_limit(assemble_family(nf, omega, alpha), t);
  CHECK_FALSE(rep.pass);
  CHECK(rep.bad_degree == 0);
  CHECK(rep.discrepancy == parse_expression(t.format(), "x1^3"));
}

TEST_CASE("small families") {
  Format f3(Q, {{3, 3}});
  SVTensor g = parse_expression(f3, "x1^3 + x2^3 - x1*x2*x3 + x3^3");
  DegenFamily one = build_family(g, EndoTuple{{Matrix(Q, 3, 3)}});
  CHECK(one.n == 1);
  CHECK(one.family.degree() == 0);
  CHECK(one.family.coefficient(0) == g);
  CHECK(verify_limit(one, g).pass);

  // x1^2*x2 with x2 -> x1.
  Format f2(Q, {{2, 3}});
  SVTensor xy = parse_expression(f2, "x1^2*x2");
  DegenFamily fam = build_family(xy, EndoTuple{{Matrix::from_ints(Q, {{0, 1}, {0, 0}})}});
  CHECK(fam.omega == qs({0, 1}));
  CHECK(verify_limit(fam, xy).pass);
  SplitWitness w = first_admissible_split(fam);
  REQUIRE(w.summands.size() == 2);
  for (const auto& l : w.local) CHECK(l.format().dim(0) == 1);
  CHECK(is_direct_sum(w.total).summands == 2);

  // u -> v -> w -> 0 as x1 -> x2 -> x3.
  SVTensor cyc = parse_expression(f3, "3*x3^2*x1 + 3*x3*x2^2");
  Matrix l = Matrix::from_ints(Q, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  DegenFamily fc = build_family(cyc, EndoTuple{{l}}, qs({0, 1, -1}));
  CHECK(verify_limit(fc, cyc).pass);
  SplitWitness wc = evaluate_and_split(fc, q(1));
  REQUIRE(wc.summands.size() == 3);
  for (const auto& s : wc.local) CHECK(s.format().dim(0) == 1);
  CHECK(is_direct_sum(wc.total).summands == 3);
}

TEST_CASE("forward-generated families") {
  std::mt19937_64 rng(79);
  const std::vector<std::vector<int>> shapes{{3}, {1, 2}, {1, 1, 1}, {4}, {2, 2}};
  for (const Field& field : {Q, Field::prime(101)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto& degs = shapes[trial % shapes.size()];
      int n = 2 + static_cast<int>(rng() % 3);
      auto inst = nilpotent_instance(rng, field, degs, n, degs.size() == 3 ? 4 : 6, 0.5, true);
      DegenFamily fam = build_family(inst.t, inst.l);
      LimitReport rep = verify_limit(fam, inst.t);
      CHECK(rep.pass);
      CHECK(rep.valuation >= n - 1);
      CHECK(fam.family.degree() <= (n - 1) * fam.format.total_degree() + n);
      SplitWitness w = first_admissible_split(fam);
      CHECK(static_cast<int>(w.summands.size()) == n);
      for (bool c : w.concise) CHECK(c);
      Conciseness c = conciseness(w.total);
      if (c.reduced.format().total_degree() >= 3 && degs.size() < 3)
        CHECK(static_cast<int>(split(c.reduced).summands.size()) >= n);
    }
  }
}
