#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "elocc/errors.hpp"
#include "elocc/filters.hpp"
#include "elocc/prob_vector.hpp"

namespace elocc {

/// Exact brute-force catalysis test: sorts both tensor products and compares
/// every prefix sum. This is the ground truth every filter is checked against.
inline bool oracle_catalyzes(const ProbVector& p, const ProbVector& q,
                             const ProbVector& r) {
  const int d = std::max(p.dim(), q.dim());
  return majorizes(tensor(p.padded(d), r), tensor(q.padded(d), r));
}

/// Oracle with diagnostics: the first violated prefix length l' (1-based) and
/// the exact positive gap there, when the test fails.
struct OracleReport {
  bool catalyzes = false;
  std::optional<int> first_violation;  // l' of the first failing prefix
  Rational gap;                        // prefix_p(l') - prefix_q(l') > 0
};

inline OracleReport oracle_report(const ProbVector& p, const ProbVector& q,
                                  const ProbVector& r) {
  const int d = std::max(p.dim(), q.dim());
  const ProbVector tp = tensor(p.padded(d), r);
  const ProbVector tq = tensor(q.padded(d), r);
  OracleReport report;
  Rational psum = 0, qsum = 0;
  for (int l = 1; l <= tp.dim(); ++l) {
    psum += tp.at1(l);
    qsum += tq.at1(l);
    if (psum > qsum) {
      report.catalyzes = false;
      report.first_violation = l;
      report.gap = psum - qsum;
      return report;
    }
  }
  report.catalyzes = true;
  return report;
}

/// Exact search grid: all nonincreasing k-part compositions of `denominator`,
/// scaled by 1/denominator. Positive parts by default; include_boundary_zeros
/// admits trailing zeros.
struct GridSpec {
  int k = 2;
  long long denominator = 200;
  bool include_boundary_zeros = false;
};

namespace detail {

inline void validate_grid(const GridSpec& grid) {
  if (grid.k < 2)
    throw Error(ErrorCode::invalid_grid, "grid dimension k must be >= 2");
  if (grid.denominator < grid.k)
    throw Error(ErrorCode::invalid_grid,
                "grid denominator " + std::to_string(grid.denominator) +
                    " must be >= k = " + std::to_string(grid.k));
}

}  // namespace detail

/// Enumerates the grid candidates as numerator tuples in ascending
/// lexicographic order, e.g. D=10, k=2 -> (5,5), (6,4), (7,3), (8,2), (9,1).
inline std::vector<std::vector<long long>> enumerate_grid(const GridSpec& grid) {
  detail::validate_grid(grid);
  std::vector<std::vector<long long>> out;
  std::vector<long long> parts(static_cast<size_t>(grid.k));
  const long long lowest = grid.include_boundary_zeros ? 0 : 1;
  auto rec = [&](auto&& self, int pos, long long remaining, long long cap) -> void {
    const int left = grid.k - pos - 1;
    if (left == 0) {
      if (remaining >= lowest && remaining <= cap) {
        parts[static_cast<size_t>(pos)] = remaining;
        out.push_back(parts);
      }
      return;
    }
    // smallest admissible first => ascending lexicographic order
    long long from = (remaining + left) / (left + 1);  // ceil(remaining/(left+1))
    if (from < lowest) from = lowest;
    for (long long v = from; v <= std::min(cap, remaining - lowest * left); ++v) {
      parts[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - v, v);
    }
  };
  rec(rec, 0, grid.denominator, grid.denominator);
  return out;
}

inline ProbVector grid_candidate(const GridSpec& grid,
                                 const std::vector<long long>& numerators) {
  std::vector<Rational> entries;
  entries.reserve(numerators.size());
  for (long long n : numerators) entries.emplace_back(n, grid.denominator);
  return detail::make_nonincreasing_unchecked(std::move(entries));
}

struct SearchConfig {
  bool use_filters = true;
  std::uint64_t max_results = 0;  // 0 = keep all
  int workers = 1;
  BatteryConfig battery;
};

struct SearchOutcome {
  std::vector<ProbVector> found;   // lexicographically smallest first
  std::uint64_t found_total = 0;   // confirmed catalysts before truncation
  std::uint64_t candidate_count = 0;
  std::uint64_t pruned_count = 0;  // filter rejects (oracle skipped)
  std::uint64_t oracle_count = 0;  // oracle invocations
  bool exhausted = false;          // full grid covered
  bool truncated = false;          // found list cut to max_results
  GridSpec grid;
};

/// Filter-pruned exhaustive grid search. The result is identical with and
/// without filters (they are sound necessary conditions), and identical for
/// every worker count: candidates are split into contiguous chunks and merged
/// back in enumeration order.
inline SearchOutcome search_catalyst(const ProbVector& p, const ProbVector& q,
                                     const GridSpec& grid,
                                     const SearchConfig& config = {}) {
  const auto ctx = detail::make_solvable_context(p, q);
  const auto candidates = enumerate_grid(grid);

  SearchOutcome outcome;
  outcome.grid = grid;
  outcome.candidate_count = candidates.size();

  const int workers =
      std::max(1, std::min<int>(config.workers, static_cast<int>(candidates.size())));

  struct ChunkResult {
    std::vector<std::uint64_t> hits;  // candidate indices, ascending
    std::uint64_t pruned = 0;
    std::uint64_t oracle = 0;
  };
  std::vector<ChunkResult> chunks(static_cast<size_t>(workers));

  auto work = [&](int w) {
    ChunkResult& local = chunks[static_cast<size_t>(w)];
    const std::uint64_t n = candidates.size();
    const std::uint64_t begin = n * static_cast<std::uint64_t>(w) /
                                static_cast<std::uint64_t>(workers);
    const std::uint64_t end = n * (static_cast<std::uint64_t>(w) + 1) /
                              static_cast<std::uint64_t>(workers);
    BatteryConfig battery = config.battery;
    battery.short_circuit = true;
    for (std::uint64_t i = begin; i < end; ++i) {
      const ProbVector r = grid_candidate(grid, candidates[i]);
      if (grid.include_boundary_zeros && r.at1(r.dim()) == 0) {
        // zero-padded candidates are lower-dimensional catalysts; the filters
        // require strictly positive entries, so only the oracle applies
        ++local.oracle;
        if (oracle_catalyzes(ctx.p, ctx.q, r)) local.hits.push_back(i);
        continue;
      }
      if (config.use_filters) {
        const BatteryResult battery_result = detail::run_battery_ctx(ctx, r, battery);
        if (!battery_result.accepted) {
          ++local.pruned;
          continue;
        }
      }
      ++local.oracle;
      if (oracle_catalyzes(ctx.p, ctx.q, r)) local.hits.push_back(i);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint64_t> hits;
  for (const auto& chunk : chunks) {
    outcome.pruned_count += chunk.pruned;
    outcome.oracle_count += chunk.oracle;
    hits.insert(hits.end(), chunk.hits.begin(), chunk.hits.end());
  }
  // chunk-ordered concatenation is already ascending by candidate index,
  // which is ascending lexicographic order of the candidates themselves
  outcome.found_total = hits.size();
  std::uint64_t keep = hits.size();
  if (config.max_results > 0 && keep > config.max_results) {
    keep = config.max_results;
    outcome.truncated = true;
  }
  outcome.found.reserve(keep);
  for (std::uint64_t i = 0; i < keep; ++i)
    outcome.found.push_back(grid_candidate(grid, candidates[hits[i]]));
  outcome.exhausted = true;
  return outcome;
}

/// Default grid resolution per catalyst dimension: fine enough to be
/// interesting, coarse enough for interactive runtimes.
inline long long default_grid_denominator(int k) {
  if (k <= 2) return 200;
  if (k == 3) return 60;
  return 30;
}

struct MinDimensionReport {
  std::optional<int> dimension;      // smallest k whose grid search succeeded
  std::optional<ProbVector> catalyst;  // lexicographically smallest at that k
  int k_lower = 2;                   // dimension bound used as the start
  int k_max = 2;
  std::vector<SearchOutcome> searches;
};

/// Scans k = max(2, k_lower) .. k_max; the first k whose grid search finds a
/// catalyst wins. Grid exhaustion certifies only grid nonexistence at each
/// resolution, not continuum nonexistence.
inline MinDimensionReport min_catalyst_dimension_report(
    const ProbVector& p, const ProbVector& q, int k_max,
    long long grid_denominator = 0, const SearchConfig& config = {}) {
  if (k_max < 2)
    throw Error(ErrorCode::invalid_grid, "k_max must be >= 2");
  MinDimensionReport report;
  report.k_max = k_max;
  report.k_lower = dimension_bound(p, q).k_lower;
  for (int k = std::max(2, report.k_lower); k <= k_max; ++k) {
    GridSpec grid{k, grid_denominator > 0 ? grid_denominator
                                          : default_grid_denominator(k)};
    SearchConfig per_k = config;
    per_k.max_results = 1;
    SearchOutcome outcome = search_catalyst(p, q, grid, per_k);
    const bool hit = outcome.found_total > 0;
    if (hit && !outcome.found.empty()) report.catalyst = outcome.found.front();
    report.searches.push_back(std::move(outcome));
    if (hit) {
      report.dimension = k;
      break;
    }
  }
  return report;
}

inline std::optional<int> min_catalyst_dimension(const ProbVector& p,
                                                 const ProbVector& q, int k_max,
                                                 long long grid_denominator = 0,
                                                 const SearchConfig& config = {}) {
  return min_catalyst_dimension_report(p, q, k_max, grid_denominator, config)
      .dimension;
}

}  // namespace elocc
