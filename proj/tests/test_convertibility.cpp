#include <doctest.h>

#include "elocc/convertibility.hpp"
#include "elocc/generator.hpp"
#include "test_support.hpp"

using elocc::Classification;
using elocc::Error;
using elocc::ProbVector;
using elocc::Rational;
using fixtures::vec;

TEST_CASE("l_set on the standard instances") {
  const auto ex1 = l_set(fixtures::example1_p(), fixtures::example1_q());
  CHECK(ex1.elements == std::vector<int>{2});
  CHECK(*ex1.min_element == 2);
  CHECK(*ex1.max_element == 2);
  CHECK(ex1.cardinality == 1);
  CHECK(ex1.classification == Classification::incomparable_solvable);

  const ProbVector p = fixtures::example1_p();
  const auto same = l_set(p, p);
  CHECK(same.elements.empty());
  CHECK(same.classification == Classification::equal);
  CHECK_FALSE(same.min_element.has_value());

  const auto sun = l_set(fixtures::sun2005_p(), fixtures::sun2005_q());
  CHECK(sun.elements == std::vector<int>{2});
  CHECK(sun.classification == Classification::incomparable_solvable);
}

TEST_CASE("l_set classification edges") {
  // q majorized by p: backward comparable despite a nonempty L
  const auto backward = l_set(vec({"0.4", "0.3", "0.2", "0.1"}),
                              vec({"0.4", "0.25", "0.25", "0.1"}));
  CHECK(backward.elements == std::vector<int>{2});
  CHECK(backward.classification == Classification::comparable_backward);

  // L touching index 1: provably no catalyst
  const auto unsolvable = l_set(fixtures::example1_q(), fixtures::example1_p());
  CHECK(unsolvable.classification == Classification::incomparable_unsolvable);
  CHECK(unsolvable.elements == std::vector<int>{1});

  const auto forward = l_set(ProbVector::uniform(4), fixtures::example1_p());
  CHECK(forward.classification == Classification::comparable_forward);
  CHECK(forward.elements.empty());
}

TEST_CASE("nielsen criterion") {
  CHECK(nielsen_convertible(vec({"0.5", "0.5"}), vec({"1", "0"})));
  CHECK(nielsen_convertible(vec({"0.5", "0.5"}), vec({"1"})));  // padding
  CHECK_FALSE(nielsen_convertible(fixtures::example1_p(), fixtures::example1_q()));
  CHECK_FALSE(nielsen_convertible(fixtures::example1_q(), fixtures::example1_p()));
}

TEST_CASE("classification agrees with the majorization test on random pairs") {
  elocc::InstanceGen gen(23);
  for (int i = 0; i < 500; ++i) {
    const int d = static_cast<int>(gen.range(3, 6));
    const ProbVector p = gen.positive_vector(d, 2520);
    const ProbVector q = gen.positive_vector(d, 2520);
    const auto report = l_set(p, q);
    const bool forward = nielsen_convertible(p, q);
    const bool is_forward_class =
        report.classification == Classification::equal ||
        report.classification == Classification::comparable_forward;
    CHECK(forward == is_forward_class);
    CHECK(forward == report.elements.empty());
  }
}

TEST_CASE("solvable pairs satisfy the existence prerequisites") {
  elocc::InstanceGen gen(29);
  int seen = 0;
  while (seen < 200) {
    auto pair = gen.solvable_pair(static_cast<int>(gen.range(4, 6)), 2520);
    REQUIRE(pair.has_value());
    ++seen;
    const int d = pair->lset.dim;
    CHECK(pair->p.at1(1) <= pair->q.at1(1));
    CHECK(pair->p.at1(d) >= pair->q.at1(d));
    CHECK(prefix_sum(pair->p, d - 1) <= prefix_sum(pair->q, d - 1));
    for (int l : pair->lset.elements) {
      CHECK(l != 1);
      CHECK(l != d - 1);
      CHECK(l != d);
    }
  }
}

TEST_CASE("universal rank reach") {
  CHECK(universal_rank_reach(vec({"0.3", "0.25", "0.25", "0.2"}), 3));
  CHECK(universal_rank_reach(vec({"0.4", "0.3", "0.3"}), 2));
  CHECK_FALSE(universal_rank_reach(vec({"0.6", "0.3", "0.1"}), 2));
  CHECK_THROWS_AS(universal_rank_reach(vec({"0.4", "0.3", "0.3"}), 3), Error);
  CHECK_THROWS_AS(universal_rank_reach(vec({"0.5", "0.5", "0"}), 2), Error);
}

TEST_CASE("boundary p_1 = 1/t reaches although the strict form fails") {
  const ProbVector p = vec({"1/3", "1/3", "1/6", "1/6"});
  CHECK(universal_rank_reach(p, 3));
  CHECK_FALSE(lemma1_strict(p, 3));
  CHECK(lemma1_strict(vec({"0.3", "0.25", "0.25", "0.2"}), 3));
}

TEST_CASE("tail-sum sufficient condition") {
  CHECK(lemma2_sufficient(vec({"0.26", "0.25", "0.25", "0.24"}), 3, 1));
  CHECK_FALSE(lemma2_sufficient(vec({"0.4", "0.3", "0.2", "0.1"}), 3, 1));
  CHECK_THROWS_AS(lemma2_sufficient(vec({"0.4", "0.3", "0.2", "0.1"}), 4, 1), Error);
  CHECK_THROWS_AS(lemma2_sufficient(vec({"0.4", "0.3", "0.2", "0.1"}), 1, 1), Error);
  CHECK_THROWS_AS(lemma2_sufficient(vec({"0.4", "0.3", "0.2", "0.1"}), 3, 4), Error);
}

TEST_CASE("tail-sum condition implies universal reach and random targets") {
  elocc::InstanceGen gen(31);
  int confirmed = 0;
  int attempts = 0;
  while (confirmed < 50 && attempts < 200000) {
    ++attempts;
    const int n = static_cast<int>(gen.range(4, 6));
    const ProbVector p = gen.near_uniform_vector(n, 2520, 2520 / (4 * n));
    const int t = static_cast<int>(gen.range(2, n - 1));
    const int s = static_cast<int>(gen.range(1, n - 1));
    if (!lemma2_sufficient(p, t, s)) continue;
    ++confirmed;
    CHECK(universal_rank_reach(p, t));
    for (int j = 0; j < 20; ++j) {
      const ProbVector target = gen.positive_vector(t, 720);
      CHECK(majorizes(p, target.padded(n)));
    }
  }
  CHECK(confirmed == 50);
}
