#pragma once

#include <optional>
#include <utility>

#include "elocc/prob_vector.hpp"
#include "elocc/rational.hpp"
#include "elocc/search.hpp"

namespace elocc {

/// Maximal conversion probability as a tail-ratio minimum, with the achieving
/// index (smallest on ties). Ratios with zero denominator never bind: a zero
/// tail of the target carries no constraint.
struct ProbabilityReport {
  Rational value;
  int argmin_l = 1;  // 1-based
};

namespace detail {

inline ProbabilityReport tail_ratio_minimum(const ProbVector& source,
                                            const ProbVector& target) {
  const int d = source.dim();
  Rational source_tail = 1, target_tail = 1;
  ProbabilityReport report{Rational(1), 1};
  bool first = true;
  for (int l = 1; l <= d; ++l) {
    if (l > 1) {
      source_tail -= source.at1(l - 1);
      target_tail -= target.at1(l - 1);
    }
    if (target_tail == 0) continue;  // skipped by convention, never binds
    const Rational ratio = source_tail / target_tail;
    if (first || ratio < report.value) {
      report.value = ratio;
      report.argmin_l = l;
      first = false;
    }
  }
  return report;
}

}  // namespace detail

/// P'_max(p -> q) = min_l E_l(p)/E_l(q) with E_l the tail sum from index l.
inline ProbabilityReport p_max_plain(const ProbVector& p, const ProbVector& q) {
  const int d = std::max(p.dim(), q.dim());
  return detail::tail_ratio_minimum(p.padded(d), q.padded(d));
}

/// Catalytic variant on the sorted tensor products, l' = 1..kd.
inline ProbabilityReport p_max_catalytic(const ProbVector& p, const ProbVector& q,
                                         const ProbVector& r) {
  const int d = std::max(p.dim(), q.dim());
  return detail::tail_ratio_minimum(tensor(p.padded(d), r), tensor(q.padded(d), r));
}

/// Modified majorization distance: twice the maximal prefix-sum excess of the
/// source tensor over the target tensor, clamped at zero (the raw maximum is
/// reported alongside). delta = 0 exactly when the catalysis succeeds.
struct DistanceReport {
  Rational delta;     // max(0, 2 * max_gap)
  Rational max_gap;   // max_l' (prefix_p(l') - prefix_q(l')), sign preserved
  int argmax_l = 1;   // smallest l' achieving max_gap
};

inline DistanceReport majorization_distance(const ProbVector& p, const ProbVector& q,
                                            const ProbVector& r) {
  const int d = std::max(p.dim(), q.dim());
  const ProbVector tp = tensor(p.padded(d), r);
  const ProbVector tq = tensor(q.padded(d), r);
  DistanceReport report;
  Rational psum = 0, qsum = 0;
  bool first = true;
  for (int l = 1; l <= tp.dim(); ++l) {
    psum += tp.at1(l);
    qsum += tq.at1(l);
    const Rational gap = psum - qsum;
    if (first || gap > report.max_gap) {
      report.max_gap = gap;
      report.argmax_l = l;
      first = false;
    }
  }
  report.delta = report.max_gap > 0 ? Rational(2) * report.max_gap : Rational(0);
  return report;
}

/// The triple equivalence: P_max = 1, delta = 0 and the oracle verdict must
/// agree exactly. Returns true iff all three coincide.
inline bool prop2_check(const ProbVector& p, const ProbVector& q,
                        const ProbVector& r) {
  const bool certain = p_max_catalytic(p, q, r).value == 1;
  const bool at_zero = majorization_distance(p, q, r).delta == 0;
  const bool catalyzed = oracle_catalyzes(p, q, r);
  return certain == at_zero && at_zero == catalyzed;
}

/// Combined metric record for a (p, q, r) triple.
struct MetricReport {
  Rational p_max;
  int argmin_l = 1;
  Rational delta;
  int argmax_l = 1;
};

inline MetricReport metric_report(const ProbVector& p, const ProbVector& q,
                                  const ProbVector& r) {
  const ProbabilityReport prob = p_max_catalytic(p, q, r);
  const DistanceReport dist = majorization_distance(p, q, r);
  return MetricReport{prob.value, prob.argmin_l, dist.delta, dist.argmax_l};
}

}  // namespace elocc
