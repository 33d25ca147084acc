#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "elocc/errors.hpp"
#include "elocc/rational.hpp"

namespace elocc {

class ProbVector;

namespace detail {
ProbVector make_nonincreasing_unchecked(std::vector<Rational> entries);
}

/// A Schmidt probability vector: exact nonnegative rationals, stored in
/// nonincreasing order, summing to exactly 1. Trailing zeros are retained
/// (padding convention); the Schmidt rank counts the nonzero entries.
///
/// Values are immutable after construction; all operations on them are pure,
/// so ProbVector is safe to share and move between threads.
class ProbVector {
 public:
  /// Sorts and validates. Throws NegativeEntry / SumNotOne (the SumNotOne
  /// message reports the exact deficit 1 - sum).
  static ProbVector from_unsorted(std::vector<Rational> values) {
    for (const Rational& v : values) {
      if (v < 0)
        throw Error(ErrorCode::negative_entry,
                    "negative entry " + format_fraction(v));
    }
    Rational sum = 0;
    for (const Rational& v : values) sum += v;
    if (sum != 1) {
      Rational deficit = Rational(1) - sum;
      throw Error(ErrorCode::sum_not_one,
                  "entries sum to " + format_fraction(sum) +
                      ", deficit " + format_fraction(deficit));
    }
    std::sort(values.begin(), values.end(), std::greater<Rational>());
    return ProbVector(std::move(values));
  }

  static ProbVector from_strings(const std::vector<std::string>& texts) {
    std::vector<Rational> values;
    values.reserve(texts.size());
    for (const auto& t : texts) values.push_back(parse_rational(t));
    return from_unsorted(std::move(values));
  }

  /// (1/t, ..., 1/t)
  static ProbVector uniform(int t) {
    if (t < 1) throw Error(ErrorCode::invalid_grid, "uniform dimension must be >= 1");
    std::vector<Rational> entries(static_cast<size_t>(t), Rational(1, t));
    return ProbVector(std::move(entries));
  }

  /// (1, 0, ..., 0)
  static ProbVector point_mass(int d) {
    if (d < 1) throw Error(ErrorCode::invalid_grid, "dimension must be >= 1");
    std::vector<Rational> entries(static_cast<size_t>(d), Rational(0));
    entries[0] = 1;
    return ProbVector(std::move(entries));
  }

  int dim() const { return static_cast<int>(entries_.size()); }

  /// Number of nonzero entries.
  int schmidt_rank() const {
    int rank = dim();
    while (rank > 0 && entries_[static_cast<size_t>(rank) - 1] == 0) --rank;
    return rank;
  }

  const std::vector<Rational>& entries() const { return entries_; }

  /// 1-based accessor matching the usual subscript convention p_1 >= p_2 >= ...
  const Rational& at1(int i) const {
    if (i < 1 || i > dim())
      throw Error(ErrorCode::index_out_of_range,
                  "entry index " + std::to_string(i) + " outside [1, " +
                      std::to_string(dim()) + "]");
    return entries_[static_cast<size_t>(i) - 1];
  }

  ProbVector padded(int target_dim) const {
    if (target_dim <= dim()) return *this;
    std::vector<Rational> entries = entries_;
    entries.resize(static_cast<size_t>(target_dim), Rational(0));
    return ProbVector(std::move(entries));
  }

  bool operator==(const ProbVector& other) const = default;

 private:
  explicit ProbVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  friend ProbVector detail::make_nonincreasing_unchecked(std::vector<Rational>);

  std::vector<Rational> entries_;
};

namespace detail {

/// Trusted constructor for callers that guarantee the invariants already hold
/// (grid enumeration, tensor products). Skips validation and sorting.
inline ProbVector make_nonincreasing_unchecked(std::vector<Rational> entries) {
  return ProbVector(std::move(entries));
}

}  // namespace detail

struct QuantizeResult {
  ProbVector vector;
  Rational adjustment;  // exact amount added to the largest entry
};

/// Float ingestion adapter: quantizes each value to a rational with the given
/// denominator and restores exact sum 1 by adjusting the largest entry. The
/// adjustment is reported back to the caller.
inline QuantizeResult quantize_doubles(const std::vector<double>& values,
                                       long long max_denominator = 1000000000LL) {
  if (max_denominator < 1)
    throw Error(ErrorCode::parse_error, "quantization denominator must be >= 1");
  if (values.empty())
    throw Error(ErrorCode::sum_not_one, "empty vector cannot sum to 1");
  std::vector<BigInt> nums;
  nums.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v))
      throw Error(ErrorCode::parse_error, "non-finite entry");
    const long double scaled =
        static_cast<long double>(v) * static_cast<long double>(max_denominator);
    BigInt n(llroundl(scaled));
    if (n < 0)
      throw Error(ErrorCode::negative_entry,
                  "entry quantizes to a negative rational");
    nums.push_back(n);
  }
  BigInt sum = 0;
  for (const BigInt& n : nums) sum += n;
  const BigInt deficit = BigInt(max_denominator) - sum;
  auto largest = std::max_element(nums.begin(), nums.end());
  *largest += deficit;
  if (*largest < 0)
    throw Error(ErrorCode::sum_not_one,
                "quantized entries sum too far from 1 to renormalize");
  std::vector<Rational> entries;
  entries.reserve(nums.size());
  for (const BigInt& n : nums) entries.emplace_back(n, BigInt(max_denominator));
  std::sort(entries.begin(), entries.end(), std::greater<Rational>());
  return QuantizeResult{detail::make_nonincreasing_unchecked(std::move(entries)),
                        Rational(deficit, BigInt(max_denominator))};
}

/// Exact prefix sums of a ProbVector: nondecreasing, final element 1.
struct CumulativeProfile {
  std::vector<Rational> prefix_sums;
};

inline CumulativeProfile cumulative(const ProbVector& x) {
  CumulativeProfile profile;
  profile.prefix_sums.reserve(static_cast<size_t>(x.dim()));
  Rational running = 0;
  for (const Rational& v : x.entries()) {
    running += v;
    profile.prefix_sums.push_back(running);
  }
  return profile;
}

/// Prefix sum of the first l entries (l = 0 gives 0, l = dim gives 1).
inline Rational prefix_sum(const ProbVector& x, int l) {
  if (l < 0 || l > x.dim())
    throw Error(ErrorCode::index_out_of_range,
                "prefix length " + std::to_string(l) + " outside [0, " +
                    std::to_string(x.dim()) + "]");
  Rational running = 0;
  for (int i = 1; i <= l; ++i) running += x.at1(i);
  return running;
}

/// Sorted tensor product: all pairwise products, nonincreasing.
inline ProbVector tensor(const ProbVector& x, const ProbVector& y) {
  std::vector<Rational> products;
  products.reserve(static_cast<size_t>(x.dim()) * static_cast<size_t>(y.dim()));
  for (const Rational& a : x.entries())
    for (const Rational& b : y.entries()) products.push_back(a * b);
  std::sort(products.begin(), products.end(), std::greater<Rational>());
  return detail::make_nonincreasing_unchecked(std::move(products));
}

/// Majorization test: true iff weaker is majorized by stronger, i.e. every
/// prefix sum of weaker is <= the corresponding prefix sum of stronger,
/// exactly. Pads both vectors with zeros to a common dimension first.
inline bool majorizes(const ProbVector& weaker, const ProbVector& stronger) {
  const int d = std::max(weaker.dim(), stronger.dim());
  const ProbVector w = weaker.padded(d);
  const ProbVector s = stronger.padded(d);
  Rational wsum = 0, ssum = 0;
  for (int l = 1; l <= d; ++l) {
    wsum += w.at1(l);
    ssum += s.at1(l);
    if (wsum > ssum) return false;
  }
  return true;
}

}  // namespace elocc
