#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elocc/errors.hpp"
#include "elocc/prob_vector.hpp"

namespace elocc {

/// Relation between a source/target pair of Schmidt vectors.
enum class Classification {
  equal,
  comparable_forward,        // p majorized by q: LOCC-convertible p -> q
  comparable_backward,       // q majorized by p
  incomparable_solvable,     // L avoids {1, d-1, d}: a catalyst may exist
  incomparable_unsolvable,   // L hits {1, d-1, d}: no catalyst can exist
};

inline const char* classification_name(Classification c) {
  switch (c) {
    case Classification::equal: return "equal";
    case Classification::comparable_forward: return "comparable_forward";
    case Classification::comparable_backward: return "comparable_backward";
    case Classification::incomparable_solvable: return "incomparable_solvable";
    case Classification::incomparable_unsolvable: return "incomparable_unsolvable";
  }
  return "unknown";
}

/// The index set L = { l : sum_{i<=l} p_i > sum_{i<=l} q_i } together with its
/// extremes and the pair's classification. Indices are 1-based prefix lengths.
struct LSetReport {
  std::vector<int> elements;        // sorted ascending
  std::optional<int> min_element;   // m_L, absent when L is empty
  std::optional<int> max_element;   // M_L
  int cardinality = 0;              // m = #L
  int dim = 0;                      // common (padded) dimension d
  Classification classification = Classification::equal;

  bool solvable() const {
    return classification == Classification::incomparable_solvable;
  }
};

/// Computes L and classifies the pair. Pads p and q with zeros to a common
/// dimension before comparing prefix sums.
inline LSetReport l_set(const ProbVector& p, const ProbVector& q) {
  const int d = std::max(p.dim(), q.dim());
  const ProbVector pp = p.padded(d);
  const ProbVector qq = q.padded(d);

  LSetReport report;
  report.dim = d;
  Rational psum = 0, qsum = 0;
  bool q_dominates = true;  // tracks q majorized by p (reverse direction)
  for (int l = 1; l <= d; ++l) {
    psum += pp.at1(l);
    qsum += qq.at1(l);
    if (psum > qsum) report.elements.push_back(l);
    if (qsum > psum) q_dominates = false;
  }
  report.cardinality = static_cast<int>(report.elements.size());
  if (!report.elements.empty()) {
    report.min_element = report.elements.front();
    report.max_element = report.elements.back();
  }

  if (pp == qq) {
    report.classification = Classification::equal;
  } else if (report.elements.empty()) {
    report.classification = Classification::comparable_forward;
  } else if (q_dominates) {
    report.classification = Classification::comparable_backward;
  } else {
    bool solvable = true;
    for (int l : report.elements) {
      if (l == 1 || l == d - 1 || l == d) {
        solvable = false;
        break;
      }
    }
    report.classification = solvable ? Classification::incomparable_solvable
                                     : Classification::incomparable_unsolvable;
  }
  return report;
}

/// Nielsen's criterion: p -> q under LOCC iff p is majorized by q.
inline bool nielsen_convertible(const ProbVector& p, const ProbVector& q) {
  return majorizes(p, q);
}

namespace detail {
inline void require_below_rank(const ProbVector& p, int t) {
  const int rank = p.schmidt_rank();
  if (t < 1 || t >= rank)
    throw Error(ErrorCode::rank_order_violation,
                "t = " + std::to_string(t) + " must satisfy 1 <= t < schmidt rank " +
                    std::to_string(rank));
}
}  // namespace detail

/// True iff p can reach every rank-t target, decided as the exact majorization
/// p < uniform_t. The literal strict condition of the rank lemma is exposed
/// separately as lemma1_strict; the boundary case p_1 = 1/t can still satisfy
/// the majorization.
inline bool universal_rank_reach(const ProbVector& p, int t) {
  detail::require_below_rank(p, t);
  return majorizes(p, ProbVector::uniform(t));
}

/// The literal strict form p_1 < 1/t.
inline bool lemma1_strict(const ProbVector& p, int t) {
  detail::require_below_rank(p, t);
  return p.at1(1) < Rational(1, t);
}

/// Sufficient condition on the s smallest entries:
///   s(t-1)/(t(n-1)) < sum of the s smallest entries < s/n
/// with n = dim(p). When it holds, universal_rank_reach(p, t) must hold too.
inline bool lemma2_sufficient(const ProbVector& p, int t, int s) {
  const int n = p.dim();
  if (!(1 < t && t < n))
    throw Error(ErrorCode::rank_order_violation,
                "t = " + std::to_string(t) + " must satisfy 1 < t < n = " +
                    std::to_string(n));
  if (!(1 <= s && s < n))
    throw Error(ErrorCode::rank_order_violation,
                "s = " + std::to_string(s) + " must satisfy 1 <= s < n = " +
                    std::to_string(n));
  Rational tail = 0;
  for (int i = n - s + 1; i <= n; ++i) tail += p.at1(i);
  const Rational lower(static_cast<long long>(s) * (t - 1),
                       static_cast<long long>(t) * (n - 1));
  const Rational upper(s, n);
  return lower < tail && tail < upper;
}

}  // namespace elocc
