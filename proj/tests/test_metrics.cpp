#include <doctest.h>

#include "elocc/generator.hpp"
#include "elocc/metrics.hpp"
#include "test_support.hpp"

using elocc::ProbVector;
using elocc::Rational;
using fixtures::vec;

TEST_CASE("plain conversion probability") {
  const auto ex = p_max_plain(fixtures::example1_p(), fixtures::example1_q());
  CHECK(ex.value == Rational(5, 6));
  CHECK(ex.argmin_l == 3);

  // majorized pairs convert with certainty
  const auto certain = p_max_plain(vec({"0.5", "0.5"}), vec({"0.9", "0.1"}));
  CHECK(certain.value == Rational(1));
  CHECK(certain.argmin_l == 1);

  const auto uniform_up = p_max_plain(ProbVector::uniform(4), fixtures::example1_q());
  CHECK(uniform_up.value == Rational(1));
}

TEST_CASE("catalytic conversion probability") {
  const auto ex = p_max_catalytic(fixtures::example1_p(), fixtures::example1_q(),
                                  vec({"0.7", "0.3"}));
  CHECK(ex.value == Rational(5, 6));
  CHECK(ex.argmin_l == 7);

  // an oracle-confirmed catalyst gives certainty
  const auto jp = p_max_catalytic(fixtures::jp_p(), fixtures::jp_q(), fixtures::jp_r());
  CHECK(jp.value == Rational(1));

  // the trivial catalyst reproduces the plain value
  elocc::InstanceGen gen(71);
  for (int i = 0; i < 50; ++i) {
    const ProbVector p = gen.positive_vector(4, 360);
    const ProbVector q = gen.positive_vector(4, 360);
    CHECK(p_max_catalytic(p, q, vec({"1"})).value == p_max_plain(p, q).value);
  }
}

TEST_CASE("zero target tails never bind") {
  const ProbVector p = ProbVector::uniform(4);
  const ProbVector q = vec({"0.5", "0.5", "0", "0"});
  const auto report = p_max_plain(p, q);
  CHECK(report.value == Rational(1));  // p is majorized by q
  CHECK(report.argmin_l == 1);
}

TEST_CASE("majorization distance") {
  const auto ex = majorization_distance(fixtures::example1_p(), fixtures::example1_q(),
                                        vec({"0.7", "0.3"}));
  CHECK(ex.delta == Rational(1, 20));
  CHECK(ex.argmax_l == 2);
  CHECK(ex.max_gap == Rational(1, 40));

  const auto jp = majorization_distance(fixtures::jp_p(), fixtures::jp_q(),
                                        fixtures::jp_r());
  CHECK(jp.delta == Rational(0));

  const ProbVector p = fixtures::example1_p();
  const auto same = majorization_distance(p, p, vec({"1"}));
  CHECK(same.delta == Rational(0));
  CHECK(same.argmax_l == 1);
}

TEST_CASE("triple equivalence on the worked instances") {
  CHECK(prop2_check(fixtures::jp_p(), fixtures::jp_q(), fixtures::jp_r()));
  CHECK(prop2_check(fixtures::example1_p(), fixtures::example1_q(),
                    vec({"0.7", "0.3"})));
}

TEST_CASE("triple equivalence on random triples") {
  elocc::InstanceGen gen(73);
  for (int i = 0; i < 400; ++i) {
    const int d = static_cast<int>(gen.range(3, 6));
    const int k = static_cast<int>(gen.range(2, 3));
    const ProbVector p = gen.positive_vector(d, 840);
    const ProbVector q = gen.positive_vector(d, 840);
    const ProbVector r = gen.positive_vector(k, 60);
    CHECK(prop2_check(p, q, r));
    const auto prob = p_max_catalytic(p, q, r);
    CHECK(prob.value > 0);
    CHECK(prob.value <= 1);
    CHECK(majorization_distance(p, q, r).delta >= 0);
  }
}

TEST_CASE("tail sums decrease monotonically on both sides") {
  const ProbVector p = fixtures::example1_p();
  const ProbVector q = fixtures::example1_q();
  const ProbVector tp = tensor(p, vec({"0.7", "0.3"}));
  const ProbVector tq = tensor(q, vec({"0.7", "0.3"}));
  Rational prev_p = 2, prev_q = 2;
  Rational tail_p = 1, tail_q = 1;
  for (int l = 1; l <= tp.dim(); ++l) {
    if (l > 1) {
      tail_p -= tp.at1(l - 1);
      tail_q -= tq.at1(l - 1);
    }
    CHECK(tail_p <= prev_p);
    CHECK(tail_q <= prev_q);
    prev_p = tail_p;
    prev_q = tail_q;
  }
}

TEST_CASE("combined metric report") {
  const auto report = metric_report(fixtures::example1_p(), fixtures::example1_q(),
                                    vec({"0.7", "0.3"}));
  CHECK(report.p_max == Rational(5, 6));
  CHECK(report.argmin_l == 7);
  CHECK(report.delta == Rational(1, 20));
  CHECK(report.argmax_l == 2);
}
