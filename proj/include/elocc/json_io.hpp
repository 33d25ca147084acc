#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "elocc/convertibility.hpp"
#include "elocc/errors.hpp"
#include "elocc/filters.hpp"
#include "elocc/metrics.hpp"
#include "elocc/prob_vector.hpp"
#include "elocc/protocol.hpp"
#include "elocc/rational.hpp"
#include "elocc/search.hpp"

namespace elocc {

/// All emitted JSON uses insertion-ordered objects so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Exact value plus a 12-significant-digit decimal for human readers.
inline Json rational_json(const Rational& x) {
  return Json{{"frac", format_fraction(x)}, {"dec", to_decimal_string(x)}};
}

/// Vectors serialize as arrays of exact fraction strings; exact round-trip.
inline Json vector_json(const ProbVector& v) {
  Json arr = Json::array();
  for (const Rational& e : v.entries()) arr.push_back(format_fraction(e));
  return arr;
}

/// Accepts an array of strings (fractions or decimals). JSON numbers are
/// rejected: binary floating point cannot state the intended rational.
inline ProbVector vector_from_json(const Json& j) {
  if (!j.is_array())
    throw Error(ErrorCode::parse_error, "vector must be a JSON array of strings");
  std::vector<std::string> texts;
  for (const auto& item : j) {
    if (!item.is_string())
      throw Error(ErrorCode::parse_error,
                  "vector entries must be strings like \"7/20\" or \"0.35\" "
                  "(JSON numbers are not exact)");
    texts.push_back(item.get<std::string>());
  }
  return ProbVector::from_strings(texts);
}

inline Json lset_json(const LSetReport& report) {
  Json j;
  j["elements"] = report.elements;
  j["m_L"] = report.min_element ? Json(*report.min_element) : Json(nullptr);
  j["M_L"] = report.max_element ? Json(*report.max_element) : Json(nullptr);
  j["m"] = report.cardinality;
  j["dim"] = report.dim;
  j["classification"] = classification_name(report.classification);
  return j;
}

inline Json witness_json(const FilterWitness& w) {
  Json j;
  j["inequality"] = w.inequality;
  if (w.l) j["l"] = *w.l;
  if (w.s) j["s"] = *w.s;
  if (w.c1) j["c1"] = *w.c1;
  if (w.c2) j["c2"] = *w.c2;
  if (w.v) j["v"] = *w.v;
  if (!w.sequence.empty()) j["sequence"] = w.sequence;
  if (!w.subset.empty()) j["subset"] = w.subset;
  j["lhs"] = rational_json(w.lhs);
  j["rhs"] = rational_json(w.rhs);
  j["relation"] = std::string(1, w.relation);
  return j;
}

inline Json verdict_json(const FilterVerdict& v) {
  Json j;
  j["filter"] = filter_id_name(v.id);
  j["accepted"] = v.accepted;
  if (v.inconclusive) j["inconclusive"] = true;
  j["witness"] = v.witness ? witness_json(*v.witness) : Json(nullptr);
  return j;
}

inline Json battery_json(const BatteryResult& battery) {
  Json j;
  j["accepted"] = battery.accepted;
  j["first_reject"] =
      battery.first_reject ? Json(filter_id_name(*battery.first_reject)) : Json(nullptr);
  Json verdicts = Json::array();
  for (const auto& v : battery.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;
  return j;
}

inline Json bound_json(const BoundParams& bound) {
  Json j;
  j["a"] = bound.a ? rational_json(*bound.a) : Json("inf");
  j["b"] = rational_json(bound.b);
  j["c"] = rational_json(bound.c);
  j["k_lower"] = bound.k_lower;
  return j;
}

inline Json interval_json(const std::optional<RatioInterval>& interval) {
  Json j;
  j["empty"] = !interval.has_value();
  if (interval) {
    j["lower"] = rational_json(interval->lower);
    j["upper"] = rational_json(interval->upper);
  }
  return j;
}

inline Json oracle_json(const OracleReport& report) {
  Json j;
  j["catalyzes"] = report.catalyzes;
  if (report.first_violation) {
    j["first_violation"] = *report.first_violation;
    j["gap"] = rational_json(report.gap);
  }
  return j;
}

inline Json grid_json(const GridSpec& grid) {
  Json j;
  j["k"] = grid.k;
  j["denominator"] = grid.denominator;
  j["include_boundary_zeros"] = grid.include_boundary_zeros;
  return j;
}

inline Json search_json(const SearchOutcome& outcome) {
  Json j;
  j["grid"] = grid_json(outcome.grid);
  Json found = Json::array();
  for (const auto& r : outcome.found) found.push_back(vector_json(r));
  j["found"] = found;
  j["found_total"] = outcome.found_total;
  j["candidate_count"] = outcome.candidate_count;
  j["pruned_count"] = outcome.pruned_count;
  j["oracle_count"] = outcome.oracle_count;
  j["exhausted"] = outcome.exhausted;
  j["truncated"] = outcome.truncated;
  return j;
}

inline Json probability_json(const ProbabilityReport& report) {
  Json j;
  j["value"] = rational_json(report.value);
  j["argmin_l"] = report.argmin_l;
  return j;
}

inline Json distance_json(const DistanceReport& report) {
  Json j;
  j["delta"] = rational_json(report.delta);
  j["max_gap"] = rational_json(report.max_gap);
  j["argmax_l"] = report.argmax_l;
  return j;
}

inline Json branch_json(const BranchReport& br) {
  Json j;
  j["index"] = br.index;
  j["weight"] = rational_json(br.weight);
  j["catalyzes"] = br.catalyzes;
  j["oracle"] = oracle_json(br.oracle);
  return j;
}

inline Json protocol_json(const ProtocolReport& report) {
  Json j;
  j["feasible"] = report.feasible;
  Json branches = Json::array();
  for (const auto& br : report.branches) branches.push_back(branch_json(br));
  j["branches"] = branches;
  if (report.feasible) {
    Json dist = Json::array();
    for (const auto& w : report.ancilla_distribution)
      dist.push_back(format_fraction(w));
    j["ancilla_distribution"] = dist;
  }
  return j;
}

inline Json trace_json(const ProtocolTrace& trace) {
  Json steps = Json::array();
  {
    Json step;
    step["step"] = 1;
    step["action"] = "prepare ancilla";
    step["ancilla_dimension"] = trace.ancilla_dimension;
    Json weights = Json::array();
    for (const auto& w : trace.ancilla_distribution)
      weights.push_back(format_fraction(w));
    step["initial_weights"] = weights;
    steps.push_back(step);
  }
  {
    Json step;
    step["step"] = 2;
    step["action"] = "apply per-branch conversions";
    Json events = Json::array();
    for (const auto& ev : trace.conversion_events) events.push_back(branch_json(ev));
    step["events"] = events;
    steps.push_back(step);
  }
  {
    Json step;
    step["step"] = 3;
    step["action"] = "collect final state and trace out";
    step["final_output"] = vector_json(trace.final_output);
    step["final_catalyst"] = vector_json(trace.final_catalyst);
    Json dist = Json::array();
    for (const auto& w : trace.ancilla_distribution)
      dist.push_back(format_fraction(w));
    step["ancilla_distribution"] = dist;
    step["post_trace_output"] = vector_json(trace.post_trace_output);
    steps.push_back(step);
  }
  Json j;
  j["steps"] = steps;
  return j;
}

inline EnsembleSpec ensemble_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("branches") || !j.contains("target") ||
      !j.contains("catalyst"))
    throw Error(ErrorCode::parse_error,
                "ensemble needs fields: branches, target, catalyst");
  EnsembleSpec spec{{}, vector_from_json(j.at("target")),
                    vector_from_json(j.at("catalyst"))};
  if (!j.at("branches").is_array())
    throw Error(ErrorCode::parse_error, "branches must be an array");
  for (const auto& bj : j.at("branches")) {
    if (!bj.is_object() || !bj.contains("weight") || !bj.contains("schmidt"))
      throw Error(ErrorCode::parse_error,
                  "each branch needs fields: weight, schmidt");
    if (!bj.at("weight").is_string())
      throw Error(ErrorCode::parse_error, "branch weight must be a string");
    spec.branches.push_back(EnsembleBranch{
        parse_rational(bj.at("weight").get<std::string>()),
        vector_from_json(bj.at("schmidt"))});
  }
  return spec;
}

inline Json ensemble_json(const EnsembleSpec& spec) {
  Json j;
  Json branches = Json::array();
  for (const auto& b : spec.branches) {
    Json bj;
    bj["weight"] = format_fraction(b.weight);
    bj["schmidt"] = vector_json(b.schmidt);
    branches.push_back(bj);
  }
  j["branches"] = branches;
  j["target"] = vector_json(spec.target);
  j["catalyst"] = vector_json(spec.catalyst);
  return j;
}

inline Json error_json(const Error& e) {
  Json j;
  j["error"] = Json{{"code", e.code_name()}, {"message", e.what()}};
  return j;
}

}  // namespace elocc
