#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "elocc/convertibility.hpp"
#include "elocc/prob_vector.hpp"

namespace elocc {

/// Deterministic instance sampler. Identical seeds produce identical
/// sequences on every run; all randomness is drawn from one splitmix64
/// stream, with no library distributions involved.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() %
                                       static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Random sorted probability vector with strictly positive entries of the
  /// given common denominator: a uniform composition via distinct cut points.
  ProbVector positive_vector(int dim, long long denominator) {
    std::vector<long long> cuts{0, denominator};
    while (static_cast<int>(cuts.size()) < dim + 1) {
      const long long c = range(1, denominator - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
      entries.emplace_back(cuts[static_cast<size_t>(i) + 1] - cuts[static_cast<size_t>(i)],
                           denominator);
    std::sort(entries.begin(), entries.end(), std::greater<Rational>());
    return detail::make_nonincreasing_unchecked(std::move(entries));
  }

  /// Random vector concentrated near uniform: numerators D/dim +- jitter.
  ProbVector near_uniform_vector(int dim, long long denominator, long long jitter) {
    std::vector<long long> nums(static_cast<size_t>(dim), denominator / dim);
    long long excess = denominator - (denominator / dim) * dim;
    for (int i = 0; i < dim; ++i) {
      const long long delta = range(-jitter, jitter);
      nums[static_cast<size_t>(i)] += delta;
      excess -= delta;
    }
    // settle the remainder on the first entry that stays positive
    for (auto& n : nums)
      if (n + excess >= 1) {
        n += excess;
        excess = 0;
        break;
      }
    if (excess != 0) return positive_vector(dim, denominator);
    for (long long n : nums)
      if (n < 1) return positive_vector(dim, denominator);
    std::vector<Rational> entries;
    entries.reserve(nums.size());
    for (long long n : nums) entries.emplace_back(n, denominator);
    std::sort(entries.begin(), entries.end(), std::greater<Rational>());
    return detail::make_nonincreasing_unchecked(std::move(entries));
  }

  struct SolvablePair {
    ProbVector p, q;
    LSetReport lset;
  };

  /// Rejection-samples a solvable incomparable pair of the given dimension.
  /// `max_attempts` guards against pathological parameters.
  std::optional<SolvablePair> solvable_pair(int dim, long long denominator,
                                            int max_attempts = 100000) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      ProbVector p = positive_vector(dim, denominator);
      ProbVector q = positive_vector(dim, denominator);
      LSetReport lset = l_set(p, q);
      if (lset.classification == Classification::incomparable_solvable)
        return SolvablePair{std::move(p), std::move(q), std::move(lset)};
    }
    return std::nullopt;
  }

 private:
  std::uint64_t state_;
};

}  // namespace elocc
