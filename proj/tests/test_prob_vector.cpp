#include <doctest.h>

#include <string>

#include "elocc/generator.hpp"
#include "elocc/json_io.hpp"
#include "elocc/prob_vector.hpp"
#include "test_support.hpp"

using elocc::Error;
using elocc::ErrorCode;
using elocc::ProbVector;
using elocc::Rational;
using fixtures::vec;

TEST_CASE("from_unsorted sorts nonincreasing") {
  const ProbVector v = vec({"0.1", "0.4", "0.35", "0.15"});
  CHECK(v == vec({"0.4", "0.35", "0.15", "0.1"}));
  CHECK(vec({"1"}).dim() == 1);
  CHECK(vec({"1"}).at1(1) == Rational(1));
}

TEST_CASE("from_unsorted rejects bad input with exact diagnostics") {
  CHECK_THROWS_AS(vec({"0.5", "0.5", "0.1"}), Error);
  try {
    vec({"0.5", "0.5", "0.1"});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::sum_not_one);
    CHECK(std::string(e.what()).find("-1/10") != std::string::npos);
  }
  try {
    vec({"0.5", "0.6", "-0.1"});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::negative_entry);
  }
}

TEST_CASE("tensor matches the enumerate-and-sort expansion") {
  const ProbVector p = fixtures::example1_p();
  const ProbVector r = vec({"0.7", "0.3"});
  const ProbVector expected = vec({"0.28", "0.245", "0.12", "0.105", "0.105",
                                   "0.07", "0.045", "0.03"});
  CHECK(tensor(p, r) == expected);

  const ProbVector q = fixtures::example1_q();
  const ProbVector expected_q = vec({"0.35", "0.15", "0.14", "0.14", "0.07",
                                     "0.06", "0.06", "0.03"});
  CHECK(tensor(q, r) == expected_q);

  // identity case
  const ProbVector one = vec({"1"});
  CHECK(tensor(one, q) == q);
  CHECK(tensor(q, one) == q);
}

TEST_CASE("majorizes compares exact prefix sums with padding") {
  CHECK_FALSE(majorizes(fixtures::example1_p(), fixtures::example1_q()));
  const ProbVector x = vec({"0.4", "0.3", "0.3"});
  CHECK(majorizes(x, x));
  CHECK(majorizes(ProbVector::uniform(4), fixtures::example1_p()));
  CHECK(majorizes(fixtures::example1_p(), ProbVector::point_mass(4)));
  // padding: (0.5, 0.5) against (1) of lower dimension
  CHECK(majorizes(vec({"0.5", "0.5"}), vec({"1"})));
}

TEST_CASE("cumulative profiles") {
  const auto profile = cumulative(fixtures::example1_p());
  const std::vector<Rational> expected{Rational(2, 5), Rational(3, 4),
                                       Rational(9, 10), Rational(1)};
  CHECK(profile.prefix_sums == expected);
  CHECK(cumulative(vec({"1"})).prefix_sums == std::vector<Rational>{Rational(1)});
  const auto with_zero = cumulative(vec({"0.5", "0.25", "0.25", "0"}));
  const std::vector<Rational> expected_zero{Rational(1, 2), Rational(3, 4),
                                            Rational(1), Rational(1)};
  CHECK(with_zero.prefix_sums == expected_zero);
}

TEST_CASE("schmidt rank counts nonzero entries, padding retains zeros") {
  const ProbVector q = fixtures::jp_q();
  CHECK(q.dim() == 4);
  CHECK(q.schmidt_rank() == 3);
  const ProbVector padded = q.padded(6);
  CHECK(padded.dim() == 6);
  CHECK(padded.schmidt_rank() == 3);
  CHECK_THROWS_AS(padded.at1(7), Error);
  CHECK_THROWS_AS(padded.at1(0), Error);
}

TEST_CASE("double quantization restores the sum exactly and reports it") {
  const auto third = elocc::quantize_doubles({1.0 / 3, 1.0 / 3, 1.0 / 3});
  Rational sum = 0;
  for (const auto& e : third.vector.entries()) sum += e;
  CHECK(sum == Rational(1));
  CHECK(third.adjustment == Rational(1, 1000000000));
  CHECK(third.vector.at1(1) == Rational(333333334, 1000000000));
  CHECK(third.vector.at1(2) == Rational(333333333, 1000000000));
  CHECK(third.vector.at1(3) == Rational(333333333, 1000000000));
  // exact decimal inputs need no adjustment
  const auto clean = elocc::quantize_doubles({0.5, 0.25, 0.25}, 100);
  CHECK(clean.adjustment == Rational(0));
  CHECK(clean.vector == vec({"0.5", "0.25", "0.25"}));
  CHECK_THROWS_AS(elocc::quantize_doubles({-0.2, 1.2}), Error);
}

TEST_CASE("uniform and point mass") {
  CHECK(ProbVector::uniform(3) == vec({"1/3", "1/3", "1/3"}));
  CHECK(ProbVector::point_mass(3) == vec({"1", "0", "0"}));
}

TEST_CASE("random vectors: tensor algebra invariants") {
  elocc::InstanceGen gen(7);
  for (int i = 0; i < 100; ++i) {
    const int dx = static_cast<int>(gen.range(2, 5));
    const int dy = static_cast<int>(gen.range(2, 4));
    const ProbVector x = gen.positive_vector(dx, 360);
    const ProbVector y = gen.positive_vector(dy, 840);
    const ProbVector xy = tensor(x, y);
    CHECK(xy == tensor(y, x));
    Rational sum = 0;
    for (const auto& e : xy.entries()) sum += e;
    CHECK(sum == Rational(1));
    CHECK(majorizes(ProbVector::uniform(dx), x));
    CHECK(majorizes(x, ProbVector::point_mass(dx)));
  }
}

TEST_CASE("fraction-string JSON round-trips exactly") {
  elocc::InstanceGen gen(13);
  for (int i = 0; i < 200; ++i) {
    const int d = static_cast<int>(gen.range(1, 6));
    const ProbVector v = gen.positive_vector(d, gen.range(d, 100000));
    CHECK(elocc::vector_from_json(elocc::vector_json(v)) == v);
  }
  // decimal strings are accepted on input
  const auto parsed = elocc::vector_from_json(
      elocc::Json::array({"0.5", "1/4", "0.25"}));
  CHECK(parsed == vec({"0.5", "0.25", "0.25"}));
  // JSON numbers are refused: they cannot state the intended rational
  CHECK_THROWS_AS(elocc::vector_from_json(elocc::Json::array({0.5, 0.5})),
                  elocc::Error);
}

TEST_CASE("random vectors: majorization is a partial order") {
  elocc::InstanceGen gen(11);
  for (int i = 0; i < 200; ++i) {
    const int d = static_cast<int>(gen.range(3, 6));
    const ProbVector a = gen.positive_vector(d, 120);
    const ProbVector b = gen.positive_vector(d, 120);
    const ProbVector c = gen.positive_vector(d, 120);
    CHECK(majorizes(a, a));  // reflexive
    if (majorizes(a, b) && majorizes(b, c)) CHECK(majorizes(a, c));
    if (majorizes(a, b) && majorizes(b, a)) CHECK(a == b);
  }
  // mutual majorization on an identical pair, non-vacuously
  const ProbVector v = gen.positive_vector(4, 97);
  const ProbVector w = v;
  CHECK(majorizes(v, w));
  CHECK(majorizes(w, v));
  CHECK(v == w);
}
