#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elocc/errors.hpp"
#include "elocc/prob_vector.hpp"
#include "elocc/search.hpp"

namespace elocc {

/// One ensemble branch: a weight and the branch state's Schmidt vector.
struct EnsembleBranch {
  Rational weight;
  ProbVector schmidt;
};

/// Mixed-state catalytic conversion instance: transform the ensemble
/// {(w_i, psi_i)} into the pure target, all branches sharing one catalyst.
/// The checker accepts catalysts of any dimension, not only rank 2.
struct EnsembleSpec {
  std::vector<EnsembleBranch> branches;
  ProbVector target;
  ProbVector catalyst;
};

namespace detail {

inline void validate_ensemble(const EnsembleSpec& e) {
  if (e.branches.empty())
    throw Error(ErrorCode::dimension_mismatch, "ensemble has no branches");
  Rational total = 0;
  for (const auto& b : e.branches) {
    if (b.weight <= 0)
      throw Error(ErrorCode::weight_sum_not_one,
                  "branch weight " + format_fraction(b.weight) +
                      " must be positive");
    total += b.weight;
  }
  if (total != 1)
    throw Error(ErrorCode::weight_sum_not_one,
                "branch weights sum to " + format_fraction(total) + ", not 1");
}

}  // namespace detail

struct BranchReport {
  int index = 1;  // 1-based branch number
  Rational weight;
  bool catalyzes = false;
  OracleReport oracle;
};

/// Per-branch convertibility plus the protocol's final bookkeeping: when every
/// branch passes, the output is the pure target with the catalyst returned
/// intact and the ancilla left in the classical mixture of the input weights.
struct ProtocolReport {
  bool feasible = false;
  std::vector<BranchReport> branches;
  std::vector<Rational> ancilla_distribution;  // = input weights when feasible
};

inline ProtocolReport protocol_feasible(const EnsembleSpec& e) {
  detail::validate_ensemble(e);
  ProtocolReport report;
  report.feasible = true;
  int index = 1;
  for (const auto& branch : e.branches) {
    BranchReport br;
    br.index = index++;
    br.weight = branch.weight;
    br.oracle = oracle_report(branch.schmidt, e.target, e.catalyst);
    br.catalyzes = br.oracle.catalyzes;
    if (!br.catalyzes) report.feasible = false;
    report.branches.push_back(std::move(br));
  }
  if (report.feasible)
    for (const auto& branch : e.branches)
      report.ancilla_distribution.push_back(branch.weight);
  return report;
}

/// Step-by-step narration of the verified protocol. Requires feasibility;
/// throws ProtocolInfeasible otherwise. This is bookkeeping over Schmidt
/// vectors, not an operator simulation: the channel construction is sound
/// exactly when each branch conversion exists, which is what gets checked.
struct ProtocolTrace {
  int ancilla_dimension = 0;                 // m = number of branches
  std::vector<BranchReport> conversion_events;
  ProbVector final_output;                   // target (pure), catalyst returned
  ProbVector final_catalyst;
  std::vector<Rational> ancilla_distribution;
  ProbVector post_trace_output;              // target alone after tracing out
};

inline ProtocolTrace protocol_trace(const EnsembleSpec& e) {
  ProtocolReport report = protocol_feasible(e);
  if (!report.feasible) {
    std::string failing;
    for (const auto& br : report.branches)
      if (!br.catalyzes) {
        failing = std::to_string(br.index);
        break;
      }
    throw Error(ErrorCode::protocol_infeasible,
                "branch " + failing + " does not convert under the catalyst");
  }
  return ProtocolTrace{static_cast<int>(e.branches.size()),
                       std::move(report.branches),
                       e.target,
                       e.catalyst,
                       std::move(report.ancilla_distribution),
                       e.target};
}

}  // namespace elocc
