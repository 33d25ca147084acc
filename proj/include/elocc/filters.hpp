#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elocc/convertibility.hpp"
#include "elocc/errors.hpp"
#include "elocc/prob_vector.hpp"
#include "elocc/rational.hpp"

namespace elocc {

enum class FilterId {
  t1_ratio,
  t2_sequence,
  cor1_twolevel,
  prop1_triple,
  prop1_edge,
  cor3_dual,
  rem2_head,
  pra99_baseline,
};

inline const char* filter_id_name(FilterId id) {
  switch (id) {
    case FilterId::t1_ratio: return "T1_RATIO";
    case FilterId::t2_sequence: return "T2_SEQUENCE";
    case FilterId::cor1_twolevel: return "COR1_TWOLEVEL";
    case FilterId::prop1_triple: return "PROP1_TRIPLE";
    case FilterId::prop1_edge: return "PROP1_EDGE";
    case FilterId::cor3_dual: return "COR3_DUAL";
    case FilterId::rem2_head: return "REM2_HEAD";
    case FilterId::pra99_baseline: return "PRA99_BASELINE";
  }
  return "UNKNOWN";
}

/// Recorded evidence for a rejection. `lhs` and `rhs` are the two sides of
/// the failed strict relation, with denominators already cleared where the
/// condition is stated as a ratio comparison (so the violation re-evaluates
/// exactly even when a Schmidt coefficient is zero).
struct FilterWitness {
  std::string inequality;            // the violated condition, in subscript form
  std::optional<int> l;              // L element involved (1-based prefix length)
  std::optional<int> s;              // secondary index where applicable
  std::optional<int> c1, c2;         // two-level indices for COR1
  std::optional<int> v;              // ratio position for PRA99
  std::vector<int> sequence;         // {j_tau} for T2
  std::vector<int> subset;           // L-subset for T2 subset instances
  Rational lhs, rhs;
  char relation = '<';               // relation that had to hold strictly
};

struct FilterVerdict {
  FilterId id;
  bool accepted = false;
  bool inconclusive = false;         // capped T2 enumeration: accept, flagged
  std::optional<FilterWitness> witness;
};

namespace detail {

/// Padded pair plus its L-set, shared across a filter battery run.
struct PairContext {
  ProbVector p, q;
  LSetReport lset;

  int d() const { return lset.dim; }
  int m() const { return lset.cardinality; }
  // l_s with the convention l_0 = 0, l_{m+1} = d
  int l_at(int s) const {
    if (s == 0) return 0;
    if (s == m() + 1) return d();
    return lset.elements[static_cast<size_t>(s) - 1];
  }
};

inline PairContext make_solvable_context(const ProbVector& p, const ProbVector& q) {
  const int d = std::max(p.dim(), q.dim());
  PairContext ctx{p.padded(d), q.padded(d), l_set(p, q)};
  if (!ctx.lset.solvable())
    throw Error(ErrorCode::unsolvable_pair,
                std::string("pair is classified ") +
                    classification_name(ctx.lset.classification) +
                    "; filters require incomparable_solvable");
  return ctx;
}

inline void require_catalyst_shape(const ProbVector& r) {
  if (r.dim() < 2)
    throw Error(ErrorCode::degenerate_catalyst,
                "catalyst must have dimension >= 2");
  if (r.at1(r.dim()) == 0)
    throw Error(ErrorCode::degenerate_catalyst,
                "catalyst entries must be strictly positive");
}

// Strict ratio comparisons by cross-multiplication: a/b > c/d etc. on
// nonnegative operands, matching the extended-rational order (x/0 = +inf for
// x > 0). All filter inequalities reduce to these.
inline bool ratio_gt(const Rational& a, const Rational& b,
                     const Rational& c, const Rational& d) {
  return a * d > c * b;
}
inline bool ratio_lt(const Rational& a, const Rational& b,
                     const Rational& c, const Rational& d) {
  return a * d < c * b;
}

/// max over l in L of min(p_l/p_{l+1}, q_l/q_{l+1}); the q-ratio is always
/// finite for l in L, so the min is finite even when p_{l+1} = 0.
inline Rational threshold_c(const PairContext& ctx) {
  Rational best = 0;
  for (int l : ctx.lset.elements) {
    const Rational q_ratio = ctx.q.at1(l) / ctx.q.at1(l + 1);
    Rational term = q_ratio;
    if (ctx.p.at1(l + 1) != 0) {
      const Rational p_ratio = ctx.p.at1(l) / ctx.p.at1(l + 1);
      if (p_ratio < term) term = p_ratio;
    }
    if (term > best) best = term;
  }
  return best;
}

inline FilterVerdict accept(FilterId id) { return FilterVerdict{id, true, false, {}}; }

inline FilterVerdict reject(FilterId id, FilterWitness w) {
  return FilterVerdict{id, false, false, std::move(w)};
}

inline FilterVerdict filter_t1_ctx(const PairContext& ctx, const ProbVector& r) {
  require_catalyst_shape(r);
  const Rational head_tail = r.at1(1) / r.at1(r.dim());
  const Rational c = threshold_c(ctx);
  if (head_tail > c) return accept(FilterId::t1_ratio);
  FilterWitness w;
  w.inequality = "r_1/r_k > max_{l in L} min(p_l/p_{l+1}, q_l/q_{l+1})";
  w.lhs = head_tail;
  w.rhs = c;
  w.relation = '>';
  return reject(FilterId::t1_ratio, std::move(w));
}

struct T2Outcome {
  bool holds = true;
  bool vacuous = false;
  Rational min_side, max_side;
};

/// Evaluates one index sequence {j_tau} (tau = 1..n) against the prefix
/// lengths ls (ls[0] = l_1, ..., ls[n-1] = l_n with l_n = d). Terms that would
/// reference r_0 or r_{k+1} are omitted from their min/max.
inline T2Outcome t2_evaluate(const PairContext& ctx, const ProbVector& r,
                             const std::vector<int>& ls, const std::vector<int>& seq) {
  const int k = r.dim();
  const int n = static_cast<int>(seq.size());
  T2Outcome out;
  bool have_min = false, have_max = false;
  for (int tau = 1; tau <= n; ++tau) {
    const int j = seq[static_cast<size_t>(tau) - 1];
    if (j >= 1) {
      const Rational term = r.at1(j) * ctx.q.at1(ls[static_cast<size_t>(tau) - 1]);
      if (!have_min || term < out.min_side) out.min_side = term;
      have_min = true;
    }
    if (j + 1 <= k) {
      const int prev_l = tau == 1 ? 0 : ls[static_cast<size_t>(tau) - 2];
      const Rational term = r.at1(j + 1) * ctx.q.at1(prev_l + 1);
      if (!have_max || term > out.max_side) out.max_side = term;
      have_max = true;
    }
  }
  if (!have_min || !have_max) {
    out.vacuous = true;
    out.holds = true;
    return out;
  }
  out.holds = out.min_side < out.max_side;
  return out;
}

inline FilterVerdict filter_t2_ctx(const PairContext& ctx, const ProbVector& r,
                                   bool subset_mode, std::uint64_t sequence_cap) {
  require_catalyst_shape(r);
  const int k = r.dim();
  const int m = ctx.m();

  std::uint64_t enumerated = 0;
  std::optional<FilterVerdict> verdict;

  // Main enumeration: nonincreasing, non-constant sequences over [0, k]^(m+1)
  // against the full set L (with l_{m+1} = d). Constant sequences carry no
  // necessary condition: the contradiction in the underlying argument needs a
  // strict decrease at some interior position.
  std::vector<int> ls;
  for (int l : ctx.lset.elements) ls.push_back(l);
  ls.push_back(ctx.d());

  std::vector<int> seq(static_cast<size_t>(m) + 1, 0);
  std::function<bool(int, int, bool)> walk =
      [&](int pos, int upper, bool has_decrease) -> bool {
    if (pos == m + 1) {
      if (!has_decrease) return true;  // constant sequence: skip
      if (++enumerated > sequence_cap) return false;
      const T2Outcome out = t2_evaluate(ctx, r, ls, seq);
      if (!out.holds) {
        FilterWitness w;
        w.inequality =
            "min_tau r_{j_tau} q_{l_tau} < max_tau r_{j_tau+1} q_{l_{tau-1}+1}";
        w.sequence = seq;
        w.lhs = out.min_side;
        w.rhs = out.max_side;
        w.relation = '<';
        verdict = reject(FilterId::t2_sequence, std::move(w));
        return false;
      }
      return true;
    }
    for (int j = upper; j >= 0; --j) {
      seq[static_cast<size_t>(pos)] = j;
      const bool dec = has_decrease || (pos > 0 && j < seq[static_cast<size_t>(pos) - 1]);
      if (!walk(pos + 1, j, dec)) return false;
    }
    return true;
  };
  const bool completed = walk(0, k, false);
  if (verdict) return *verdict;
  if (!completed) {
    FilterVerdict v = accept(FilterId::t2_sequence);
    v.inconclusive = true;
    return v;
  }

  if (subset_mode && m >= 2 && k >= 3) {
    // Proper nonempty subsets of L with strictly decreasing sequences inside
    // (0, k); the full set with such sequences is already covered above.
    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(ctx.lset.elements[static_cast<size_t>(i)]);
      const int msub = static_cast<int>(sub.size());
      if (msub + 1 > k - 1) continue;  // not enough distinct values in [1, k-1]
      std::vector<int> subls = sub;
      subls.push_back(ctx.d());
      std::vector<int> sseq(static_cast<size_t>(msub) + 1, 0);
      std::function<bool(int, int)> walk_strict = [&](int pos, int upper) -> bool {
        if (pos == msub + 1) {
          if (++enumerated > sequence_cap) return false;
          const T2Outcome out = t2_evaluate(ctx, r, subls, sseq);
          if (!out.holds) {
            FilterWitness w;
            w.inequality =
                "min_tau r_{j_tau} q_{l_tau} < max_tau r_{j_tau+1} q_{l_{tau-1}+1} "
                "(subset form)";
            w.sequence = sseq;
            w.subset = sub;
            w.lhs = out.min_side;
            w.rhs = out.max_side;
            w.relation = '<';
            verdict = reject(FilterId::t2_sequence, std::move(w));
            return false;
          }
          return true;
        }
        // remaining positions need distinct values below `upper`, above 0
        for (int j = upper - 1; j >= msub + 1 - pos; --j) {
          sseq[static_cast<size_t>(pos)] = j;
          if (!walk_strict(pos + 1, j)) return false;
        }
        return true;
      };
      if (!walk_strict(0, k)) {
        if (verdict) return *verdict;
        FilterVerdict v = accept(FilterId::t2_sequence);
        v.inconclusive = true;
        return v;
      }
    }
  }
  return accept(FilterId::t2_sequence);
}

inline FilterVerdict filter_cor1_ctx(const PairContext& ctx, const ProbVector& r,
                                     int c1, int c2, int s) {
  require_catalyst_shape(r);
  const int k = r.dim();
  const int m = ctx.m();
  if (!(0 <= c1 && c1 < c2 && c2 <= k))
    throw Error(ErrorCode::index_out_of_range,
                "need 0 <= c1 < c2 <= k; got c1=" + std::to_string(c1) +
                    ", c2=" + std::to_string(c2) + ", k=" + std::to_string(k));
  if (!(0 <= s && s <= m + 1))
    throw Error(ErrorCode::index_out_of_range,
                "need 0 <= s <= m+1 = " + std::to_string(m + 1) + "; got s=" +
                    std::to_string(s));

  bool have_min = false, have_max = false;
  Rational min_side, max_side;
  auto add_min = [&](const Rational& t) {
    if (!have_min || t < min_side) min_side = t;
    have_min = true;
  };
  auto add_max = [&](const Rational& t) {
    if (!have_max || t > max_side) max_side = t;
    have_max = true;
  };
  if (c1 >= 1) add_min(r.at1(c1) * ctx.q.at1(ctx.d()));
  if (s >= 1) add_min(r.at1(c2) * ctx.q.at1(ctx.l_at(s)));
  if (s <= m) add_max(r.at1(c1 + 1) * ctx.q.at1(ctx.l_at(s) + 1));
  if (c2 + 1 <= k) add_max(r.at1(c2 + 1) * ctx.q.at1(1));

  // Degenerate parameter choices (s = 0 or s = m+1 with a side emptied, or
  // all terms referencing r_0 / r_{k+1} / q_{d+1}) carry no derivable
  // condition: never reject on them.
  if (!have_min || !have_max) return accept(FilterId::cor1_twolevel);
  if (min_side < max_side) return accept(FilterId::cor1_twolevel);
  FilterWitness w;
  w.inequality = "min(r_{c1} q_d, r_{c2} q_{l_s}) < max(r_{c1+1} q_{l_s+1}, r_{c2+1} q_1)";
  w.c1 = c1;
  w.c2 = c2;
  w.s = s;
  w.lhs = min_side;
  w.rhs = max_side;
  w.relation = '<';
  return reject(FilterId::cor1_twolevel, std::move(w));
}

inline FilterVerdict filter_prop1_ctx(const PairContext& ctx, const ProbVector& r) {
  require_catalyst_shape(r);
  const int k = r.dim();
  const auto& q = ctx.q;
  const int d = ctx.d();

  // Interior components, three-way disjunction: for every l in L and
  // s = 2..k-1 at least one of
  //   q_1/q_d > r_{s-1}/r_{s+1},  q_1/q_l > r_s/r_{s+1},  q_{l+1}/q_d > r_{s-1}/r_s
  for (int l : ctx.lset.elements) {
    for (int s = 2; s <= k - 1; ++s) {
      const bool d1 = ratio_gt(q.at1(1), q.at1(d), r.at1(s - 1), r.at1(s + 1));
      const bool d2 = ratio_gt(q.at1(1), q.at1(l), r.at1(s), r.at1(s + 1));
      const bool d3 = ratio_gt(q.at1(l + 1), q.at1(d), r.at1(s - 1), r.at1(s));
      if (!(d1 || d2 || d3)) {
        FilterWitness w;
        w.inequality =
            "q_1/q_d > r_{s-1}/r_{s+1} or q_1/q_l > r_s/r_{s+1} or "
            "q_{l+1}/q_d > r_{s-1}/r_s (all false)";
        w.l = l;
        w.s = s;
        w.lhs = q.at1(1) * r.at1(s + 1);
        w.rhs = q.at1(d) * r.at1(s - 1);
        w.relation = '>';
        return reject(FilterId::prop1_triple, std::move(w));
      }
    }
  }

  // End components: for every l in L,
  //   q_d/q_{l+1} < r_k/r_{k-1}  and  q_1/q_l > r_1/r_2
  for (int l : ctx.lset.elements) {
    if (!ratio_lt(q.at1(d), q.at1(l + 1), r.at1(k), r.at1(k - 1))) {
      FilterWitness w;
      w.inequality = "q_d/q_{l+1} < r_k/r_{k-1}";
      w.l = l;
      w.lhs = q.at1(d) * r.at1(k - 1);
      w.rhs = q.at1(l + 1) * r.at1(k);
      w.relation = '<';
      return reject(FilterId::prop1_edge, std::move(w));
    }
    if (!ratio_gt(q.at1(1), q.at1(l), r.at1(1), r.at1(2))) {
      FilterWitness w;
      w.inequality = "q_1/q_l > r_1/r_2";
      w.l = l;
      w.lhs = q.at1(1) * r.at1(2);
      w.rhs = q.at1(l) * r.at1(1);
      w.relation = '>';
      return reject(FilterId::prop1_edge, std::move(w));
    }
  }
  return accept(FilterId::prop1_triple);
}

inline FilterVerdict filter_cor3_ctx(const PairContext& ctx, const ProbVector& r) {
  require_catalyst_shape(r);
  const int k = r.dim();
  const int ml = *ctx.lset.max_element;
  if (ratio_lt(ctx.q.at1(ctx.d()), ctx.q.at1(ml + 1), r.at1(k), r.at1(k - 1)))
    return accept(FilterId::cor3_dual);
  FilterWitness w;
  w.inequality = "q_d/q_{M_L+1} < r_k/r_{k-1}";
  w.l = ml;
  w.lhs = ctx.q.at1(ctx.d()) * r.at1(k - 1);
  w.rhs = ctx.q.at1(ml + 1) * r.at1(k);
  w.relation = '<';
  return reject(FilterId::cor3_dual, std::move(w));
}

inline FilterVerdict filter_rem2_ctx(const PairContext& ctx, const ProbVector& r) {
  require_catalyst_shape(r);
  const int ml = *ctx.lset.min_element;
  if (ratio_gt(ctx.q.at1(1), ctx.q.at1(ml), r.at1(1), r.at1(2)))
    return accept(FilterId::rem2_head);
  FilterWitness w;
  w.inequality = "q_1/q_{m_L} > r_1/r_2";
  w.l = ml;
  w.lhs = ctx.q.at1(1) * r.at1(2);
  w.rhs = ctx.q.at1(ml) * r.at1(1);
  w.relation = '>';
  return reject(FilterId::rem2_head, std::move(w));
}

inline FilterVerdict filter_pra99_ctx(const PairContext& ctx, const ProbVector& r) {
  require_catalyst_shape(r);
  const int k = r.dim();
  const auto& q = ctx.q;
  const int d = ctx.d();
  const int mn = *ctx.lset.min_element;
  const int mx = *ctx.lset.max_element;

  // max_v r_v/r_{v+1} < min(q_1/q_{m_L}, q_{M_L+1}/q_d)
  for (int v = 1; v <= k - 1; ++v) {
    if (!ratio_lt(r.at1(v), r.at1(v + 1), q.at1(1), q.at1(mn))) {
      FilterWitness w;
      w.inequality = "r_v/r_{v+1} < q_1/q_{m_L}";
      w.v = v;
      w.lhs = r.at1(v) * q.at1(mn);
      w.rhs = q.at1(1) * r.at1(v + 1);
      w.relation = '<';
      return reject(FilterId::pra99_baseline, std::move(w));
    }
    if (!ratio_lt(r.at1(v), r.at1(v + 1), q.at1(mx + 1), q.at1(d))) {
      FilterWitness w;
      w.inequality = "r_v/r_{v+1} < q_{M_L+1}/q_d";
      w.v = v;
      w.lhs = r.at1(v) * q.at1(d);
      w.rhs = q.at1(mx + 1) * r.at1(v + 1);
      w.relation = '<';
      return reject(FilterId::pra99_baseline, std::move(w));
    }
  }
  // r_1/r_k > max_{l in L} q_l/q_{l+1}
  for (int l : ctx.lset.elements) {
    if (!ratio_gt(r.at1(1), r.at1(k), q.at1(l), q.at1(l + 1))) {
      FilterWitness w;
      w.inequality = "r_1/r_k > q_l/q_{l+1}";
      w.l = l;
      w.lhs = r.at1(1) * q.at1(l + 1);
      w.rhs = q.at1(l) * r.at1(k);
      w.relation = '>';
      return reject(FilterId::pra99_baseline, std::move(w));
    }
  }
  return accept(FilterId::pra99_baseline);
}

}  // namespace detail

/// Necessary condition on the extreme ratio r_1/r_k (strict).
inline FilterVerdict filter_t1(const ProbVector& p, const ProbVector& q,
                               const ProbVector& r) {
  return detail::filter_t1_ctx(detail::make_solvable_context(p, q), r);
}

/// Full sequence-family necessary condition. Enumerates every nonincreasing,
/// non-constant index sequence over [0, k]^(m+1); with subset_mode it also
/// ranges over proper nonempty subsets of L with strictly decreasing
/// sequences inside (0, k). Beyond sequence_cap the verdict is an accept
/// flagged inconclusive (a truncated necessary-condition check must stay
/// sound).
inline FilterVerdict filter_t2(const ProbVector& p, const ProbVector& q,
                               const ProbVector& r, bool subset_mode = true,
                               std::uint64_t sequence_cap = 1000000) {
  return detail::filter_t2_ctx(detail::make_solvable_context(p, q), r, subset_mode,
                               sequence_cap);
}

/// Two-level specialization with indices (c1, c2, s); c1 = 0 drops the r_0
/// min-term, c2 = k drops the r_{k+1} max-term, s indexes L with l_0 = 0 and
/// l_{m+1} = d.
inline FilterVerdict filter_cor1(const ProbVector& p, const ProbVector& q,
                                 const ProbVector& r, int c1, int c2, int s) {
  return detail::filter_cor1_ctx(detail::make_solvable_context(p, q), r, c1, c2, s);
}

/// Component-wise criteria on adjacent catalyst entries (interior three-way
/// disjunction plus the two end-component inequalities). For k = 2 only the
/// end-component clause applies.
inline FilterVerdict filter_prop1(const ProbVector& p, const ProbVector& q,
                                  const ProbVector& r) {
  return detail::filter_prop1_ctx(detail::make_solvable_context(p, q), r);
}

/// Tail-pair necessary condition q_d/q_{M_L+1} < r_k/r_{k-1} (strict).
inline FilterVerdict filter_cor3(const ProbVector& p, const ProbVector& q,
                                 const ProbVector& r) {
  return detail::filter_cor3_ctx(detail::make_solvable_context(p, q), r);
}

/// Head-pair necessary condition q_1/q_{m_L} > r_1/r_2 (strict).
inline FilterVerdict filter_rem2(const ProbVector& p, const ProbVector& q,
                                 const ProbVector& r) {
  return detail::filter_rem2_ctx(detail::make_solvable_context(p, q), r);
}

/// Earlier published bound pair, kept for empirical comparison only; never
/// combined into the aggregate battery verdict.
inline FilterVerdict filter_pra99(const ProbVector& p, const ProbVector& q,
                                  const ProbVector& r) {
  return detail::filter_pra99_ctx(detail::make_solvable_context(p, q), r);
}

/// Scalars determining the catalyst dimension lower bound. `a` is absent when
/// q_d = 0 (the ratio q_{M_L+1}/q_d is +infinity in the extended order), in
/// which case the bound degenerates to k_lower = 2.
struct BoundParams {
  std::optional<Rational> a;  // max(q_1/q_{m_L}, q_{M_L+1}/q_d); nullopt = +inf
  Rational b;                 // max_{l in L} q_l/q_{l+1}, always >= 1
  Rational c;                 // max_{l in L} min(p_l/p_{l+1}, q_l/q_{l+1})
  int k_lower = 2;            // smallest admissible catalyst dimension
};

namespace detail {

inline BoundParams dimension_bound_ctx(const PairContext& ctx) {
  BoundParams out;
  const auto& q = ctx.q;
  const int d = ctx.d();
  const int mn = *ctx.lset.min_element;
  const int mx = *ctx.lset.max_element;

  const Rational a1 = q.at1(1) / q.at1(mn);
  if (q.at1(d) == 0) {
    out.a = std::nullopt;
  } else {
    const Rational a2 = q.at1(mx + 1) / q.at1(d);
    out.a = a1 > a2 ? a1 : a2;
  }
  out.b = 0;
  for (int l : ctx.lset.elements) {
    const Rational ratio = q.at1(l) / q.at1(l + 1);
    if (ratio > out.b) out.b = ratio;
  }
  out.c = threshold_c(ctx);

  if (!out.a) {
    out.k_lower = 2;
    return out;
  }
  // Smallest integer k with (a^2 b)^(k-1) > c^2, i.e. strictly greater than
  // ln(c)/ln(a sqrt(b)) + 1. Exact power iteration first; the directed-rounding
  // float fallback can only underestimate, never overestimate.
  const Rational growth = (*out.a) * (*out.a) * out.b;
  const Rational c_sq = out.c * out.c;
  Rational power = growth;
  int steps = 1;
  while (power <= c_sq && steps < 256) {
    power *= growth;
    ++steps;
  }
  if (power > c_sq) {
    out.k_lower = steps + 1;
  } else {
    const long double x =
        2.0L * log_rational(out.c) / log_rational(growth) + 1.0L;
    const long double x_lo = x - fabsl(x) * 1e-12L - 1e-12L;
    if (x_lo >= 2e9L)
      out.k_lower = std::numeric_limits<int>::max();
    else
      out.k_lower = static_cast<int>(floorl(x_lo)) + 1;
  }
  if (out.k_lower < 2) out.k_lower = 2;
  return out;
}

}  // namespace detail

inline BoundParams dimension_bound(const ProbVector& p, const ProbVector& q) {
  return detail::dimension_bound_ctx(detail::make_solvable_context(p, q));
}

/// Open interval of head/tail ratios r_1/r_2 that survive every k = 2
/// necessary condition. Survival does not imply a catalyst exists.
struct RatioInterval {
  Rational lower, upper;  // open interval (lower, upper)
};

inline std::optional<RatioInterval> two_dim_feasible_interval(const ProbVector& p,
                                                              const ProbVector& q) {
  const auto ctx = detail::make_solvable_context(p, q);
  const BoundParams bound = detail::dimension_bound_ctx(ctx);
  Rational lower = bound.c > 1 ? bound.c : Rational(1);
  Rational upper = ctx.q.at1(1) / ctx.q.at1(*ctx.lset.min_element);
  if (ctx.q.at1(ctx.d()) != 0) {
    const Rational tail_ratio =
        ctx.q.at1(*ctx.lset.max_element + 1) / ctx.q.at1(ctx.d());
    if (tail_ratio < upper) upper = tail_ratio;
  }
  if (lower >= upper) return std::nullopt;
  return RatioInterval{std::move(lower), std::move(upper)};
}

struct BatteryConfig {
  std::uint64_t t2_sequence_cap = 1000000;
  bool t2_subset_mode = true;
  bool short_circuit = false;
};

struct BatteryResult {
  std::vector<FilterVerdict> verdicts;  // in execution order
  bool accepted = true;
  std::optional<FilterId> first_reject;
};

namespace detail {

/// Battery order is cheapest-and-most-discriminating first:
/// T1 -> REM2 -> COR3 -> PROP1 -> T2. PRA99 is never part of the battery.
inline BatteryResult run_battery_ctx(const PairContext& ctx, const ProbVector& r,
                                     const BatteryConfig& config) {
  BatteryResult result;
  auto push = [&](FilterVerdict v) {
    if (!v.accepted && !result.first_reject) {
      result.accepted = false;
      result.first_reject = v.id;
    }
    result.verdicts.push_back(std::move(v));
    return result.accepted || !config.short_circuit;
  };
  if (!push(filter_t1_ctx(ctx, r))) return result;
  if (!push(filter_rem2_ctx(ctx, r))) return result;
  if (!push(filter_cor3_ctx(ctx, r))) return result;
  if (!push(filter_prop1_ctx(ctx, r))) return result;
  push(filter_t2_ctx(ctx, r, config.t2_subset_mode, config.t2_sequence_cap));
  return result;
}

}  // namespace detail

inline BatteryResult run_battery(const ProbVector& p, const ProbVector& q,
                                 const ProbVector& r,
                                 const BatteryConfig& config = {}) {
  return detail::run_battery_ctx(detail::make_solvable_context(p, q), r, config);
}

}  // namespace elocc
