#pragma once

// Shared fixtures: the recurring instances plus slow reference
// implementations kept deliberately independent of the library's code paths.

#include <algorithm>
#include <vector>

#include "elocc/elocc.hpp"

namespace fixtures {

using elocc::ProbVector;
using elocc::Rational;

// Incomparable pair with a 2-dim candidate that fails the tail condition.
inline ProbVector example1_p() {
  return ProbVector::from_strings({"0.4", "0.35", "0.15", "0.1"});
}
inline ProbVector example1_q() {
  return ProbVector::from_strings({"0.5", "0.2", "0.2", "0.1"});
}

// Classic catalysis success: r = (0.6, 0.4) works.
inline ProbVector jp_p() {
  return ProbVector::from_strings({"0.4", "0.4", "0.1", "0.1"});
}
inline ProbVector jp_q() {
  return ProbVector::from_strings({"0.5", "0.25", "0.25", "0"});
}
inline ProbVector jp_r() { return ProbVector::from_strings({"0.6", "0.4"}); }

// Solvable incomparable pair with no 2-dimensional catalyst.
inline ProbVector sun2005_p() {
  return ProbVector::from_strings(
      {"0.414047778", "0.31764445", "0.18499118", "0.083316592"});
}
inline ProbVector sun2005_q() {
  return ProbVector::from_strings(
      {"0.428610282", "0.289194489", "0.212421079", "0.06977415"});
}

inline ProbVector vec(const std::vector<std::string>& entries) {
  return ProbVector::from_strings(entries);
}

// Reference tensor: builds the product list and extracts maxima by repeated
// selection instead of sorting.
inline std::vector<Rational> naive_tensor(const ProbVector& x, const ProbVector& y) {
  std::vector<Rational> products;
  for (const auto& a : x.entries())
    for (const auto& b : y.entries()) products.push_back(a * b);
  std::vector<Rational> out;
  while (!products.empty()) {
    auto top = std::max_element(products.begin(), products.end());
    out.push_back(*top);
    products.erase(top);
  }
  return out;
}

// Reference majorization on raw sorted lists.
inline bool naive_majorized_by(const std::vector<Rational>& weaker,
                               const std::vector<Rational>& stronger) {
  Rational ws = 0, ss = 0;
  for (size_t i = 0; i < weaker.size(); ++i) {
    ws += weaker[i];
    ss += stronger[i];
    if (ws > ss) return false;
  }
  return true;
}

// Reference catalysis oracle from the two pieces above.
inline bool naive_catalyzes(const ProbVector& p, const ProbVector& q,
                            const ProbVector& r) {
  const int d = std::max(p.dim(), q.dim());
  return naive_majorized_by(naive_tensor(p.padded(d), r),
                            naive_tensor(q.padded(d), r));
}

}  // namespace fixtures
