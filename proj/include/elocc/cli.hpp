#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "elocc/generator.hpp"
#include "elocc/json_io.hpp"

namespace elocc {

/// A fully-specified invocation: one subcommand plus its inputs and options.
/// Round-trips losslessly through JSON (only present fields are emitted), so
/// requests can be stored in files and replayed via --input.
struct CommandRequest {
  std::string subcommand;
  std::optional<std::vector<std::string>> p, q, r;
  std::optional<int> t, s;
  std::optional<int> k;
  std::optional<long long> grid_denominator;
  std::optional<int> k_max;
  std::optional<bool> use_filters;
  std::optional<std::uint64_t> max_results;
  std::optional<int> workers;
  std::optional<std::uint64_t> t2_cap;
  std::optional<bool> subset_mode;
  std::optional<bool> short_circuit;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> dim;
  std::optional<bool> include_zeros;
  std::optional<bool> trace;
  std::optional<std::string> format;
  std::optional<Json> ensemble;
};

inline Json request_json(const CommandRequest& req) {
  Json j;
  j["subcommand"] = req.subcommand;
  if (req.p) j["p"] = *req.p;
  if (req.q) j["q"] = *req.q;
  if (req.r) j["r"] = *req.r;
  if (req.t) j["t"] = *req.t;
  if (req.s) j["s"] = *req.s;
  if (req.k) j["k"] = *req.k;
  if (req.grid_denominator) j["grid_denominator"] = *req.grid_denominator;
  if (req.k_max) j["k_max"] = *req.k_max;
  if (req.use_filters) j["use_filters"] = *req.use_filters;
  if (req.max_results) j["max_results"] = *req.max_results;
  if (req.workers) j["workers"] = *req.workers;
  if (req.t2_cap) j["t2_cap"] = *req.t2_cap;
  if (req.subset_mode) j["subset_mode"] = *req.subset_mode;
  if (req.short_circuit) j["short_circuit"] = *req.short_circuit;
  if (req.samples) j["samples"] = *req.samples;
  if (req.seed) j["seed"] = *req.seed;
  if (req.dim) j["dim"] = *req.dim;
  if (req.include_zeros) j["include_boundary_zeros"] = *req.include_zeros;
  if (req.trace) j["trace"] = *req.trace;
  if (req.format) j["format"] = *req.format;
  if (req.ensemble) j["ensemble"] = *req.ensemble;
  return j;
}

inline CommandRequest request_from_json(const Json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::parse_error, "request must be a JSON object");
  CommandRequest req;
  auto get_strings = [&](const char* key) -> std::optional<std::vector<std::string>> {
    if (!j.contains(key)) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& item : j.at(key)) {
      if (!item.is_string())
        throw Error(ErrorCode::parse_error,
                    std::string(key) + " entries must be strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  };
  if (j.contains("subcommand")) req.subcommand = j.at("subcommand").get<std::string>();
  req.p = get_strings("p");
  req.q = get_strings("q");
  req.r = get_strings("r");
  if (j.contains("t")) req.t = j.at("t").get<int>();
  if (j.contains("s")) req.s = j.at("s").get<int>();
  if (j.contains("k")) req.k = j.at("k").get<int>();
  if (j.contains("grid_denominator"))
    req.grid_denominator = j.at("grid_denominator").get<long long>();
  if (j.contains("k_max")) req.k_max = j.at("k_max").get<int>();
  if (j.contains("use_filters")) req.use_filters = j.at("use_filters").get<bool>();
  if (j.contains("max_results"))
    req.max_results = j.at("max_results").get<std::uint64_t>();
  if (j.contains("workers")) req.workers = j.at("workers").get<int>();
  if (j.contains("t2_cap")) req.t2_cap = j.at("t2_cap").get<std::uint64_t>();
  if (j.contains("subset_mode")) req.subset_mode = j.at("subset_mode").get<bool>();
  if (j.contains("short_circuit"))
    req.short_circuit = j.at("short_circuit").get<bool>();
  if (j.contains("samples")) req.samples = j.at("samples").get<std::uint64_t>();
  if (j.contains("seed")) req.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("dim")) req.dim = j.at("dim").get<int>();
  if (j.contains("include_boundary_zeros"))
    req.include_zeros = j.at("include_boundary_zeros").get<bool>();
  if (j.contains("trace")) req.trace = j.at("trace").get<bool>();
  if (j.contains("format")) req.format = j.at("format").get<std::string>();
  if (j.contains("ensemble")) req.ensemble = j.at("ensemble");
  return req;
}

struct CommandResult {
  int exit_code = 0;
  std::string output;  // JSON or CSV document, newline-terminated
};

namespace detail {

inline ProbVector required_vector(const std::optional<std::vector<std::string>>& v,
                                  const char* name) {
  if (!v)
    throw Error(ErrorCode::parse_error,
                std::string("missing required vector ") + name);
  return ProbVector::from_strings(*v);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Flattens a JSON document into key,value CSV rows (arrays/objects recurse
/// with dotted paths). Good enough for plotting pipelines.
inline void flatten_csv(const Json& j, const std::string& prefix,
                        std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& value : j)
      flatten_csv(value, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    std::string value = j.is_string() ? j.get<std::string>() : j.dump();
    out << csv_escape(prefix) << "," << csv_escape(value) << "\n";
  }
}

inline std::string key_value_csv(const Json& j) {
  std::ostringstream out;
  out << "key,value\n";
  flatten_csv(j, "", out);
  return out.str();
}

inline BatteryConfig battery_config(const CommandRequest& req) {
  BatteryConfig config;
  if (req.t2_cap) config.t2_sequence_cap = *req.t2_cap;
  if (req.subset_mode) config.t2_subset_mode = *req.subset_mode;
  if (req.short_circuit) config.short_circuit = *req.short_circuit;
  return config;
}

inline SearchConfig search_config(const CommandRequest& req) {
  SearchConfig config;
  if (req.use_filters) config.use_filters = *req.use_filters;
  if (req.max_results) config.max_results = *req.max_results;
  if (req.workers) config.workers = *req.workers;
  config.battery = battery_config(req);
  return config;
}

inline Json filters_context_json(const ProbVector& p, const ProbVector& q,
                                 const ProbVector& r) {
  const auto ctx = make_solvable_context(p, q);
  Json j;
  j["L"] = ctx.lset.elements;
  j["c"] = rational_json(threshold_c(ctx));
  j["q1_over_qmL"] =
      rational_json(ctx.q.at1(1) / ctx.q.at1(*ctx.lset.min_element));
  const Rational qd = ctx.q.at1(ctx.d());
  j["qMLp1_over_qd"] =
      qd == 0 ? Json("inf")
              : rational_json(ctx.q.at1(*ctx.lset.max_element + 1) / qd);
  j["r1_over_rk"] = rational_json(r.at1(1) / r.at1(r.dim()));
  return j;
}

inline Json run_check(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  const LSetReport lset = l_set(p, q);
  Json j;
  j["convertible"] = nielsen_convertible(p, q);
  j["convertible_reverse"] = nielsen_convertible(q, p);
  j["classification"] = classification_name(lset.classification);
  j["L"] = lset.elements;
  j["m_L"] = lset.min_element ? Json(*lset.min_element) : Json(nullptr);
  j["M_L"] = lset.max_element ? Json(*lset.max_element) : Json(nullptr);
  return j;
}

inline Json run_lset(const CommandRequest& req) {
  return lset_json(l_set(required_vector(req.p, "p"), required_vector(req.q, "q")));
}

inline Json run_reach(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  if (!req.t) throw Error(ErrorCode::parse_error, "missing required option t");
  Json j;
  j["t"] = *req.t;
  j["universal_rank_reach"] = universal_rank_reach(p, *req.t);
  j["lemma1_strict"] = lemma1_strict(p, *req.t);
  if (req.s) {
    Json lj;
    lj["s"] = *req.s;
    lj["sufficient"] = lemma2_sufficient(p, *req.t, *req.s);
    j["lemma2"] = lj;
  }
  return j;
}

inline Json run_filters(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  const ProbVector r = required_vector(req.r, "r");
  Json j;
  j["context"] = filters_context_json(p, q, r);
  j["battery"] = battery_json(run_battery(p, q, r, battery_config(req)));
  j["pra99"] = verdict_json(filter_pra99(p, q, r));
  return j;
}

inline Json run_bound(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  Json j = bound_json(dimension_bound(p, q));
  j["two_dim_interval"] = interval_json(two_dim_feasible_interval(p, q));
  return j;
}

inline GridSpec grid_from_request(const CommandRequest& req) {
  GridSpec grid;
  grid.k = req.k.value_or(2);
  grid.denominator =
      req.grid_denominator.value_or(default_grid_denominator(grid.k));
  grid.include_boundary_zeros = req.include_zeros.value_or(false);
  return grid;
}

inline Json run_search(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  return search_json(search_catalyst(p, q, grid_from_request(req), search_config(req)));
}

/// CSV stream of per-candidate verdicts: the raw material for plotting
/// feasible regions (for k = 2 the ratio column is r_1/r_2).
inline std::string run_search_csv(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  const GridSpec grid = grid_from_request(req);
  const SearchConfig config = search_config(req);
  const auto ctx = make_solvable_context(p, q);
  BatteryConfig battery = config.battery;
  battery.short_circuit = true;

  std::ostringstream out;
  out << "index,candidate,r1_over_rk,battery,oracle\n";
  const auto candidates = enumerate_grid(grid);
  for (std::uint64_t i = 0; i < candidates.size(); ++i) {
    const ProbVector r = grid_candidate(grid, candidates[i]);
    std::string cand;
    for (int e = 1; e <= r.dim(); ++e) {
      if (e > 1) cand += " ";
      cand += format_fraction(r.at1(e));
    }
    const bool degenerate = r.at1(r.dim()) == 0;
    std::string battery_cell = "-";
    bool run_oracle = true;
    if (config.use_filters && !degenerate) {
      const bool ok = run_battery_ctx(ctx, r, battery).accepted;
      battery_cell = ok ? "accept" : "reject";
      run_oracle = ok;
    }
    std::string oracle_cell = "skipped";
    if (run_oracle)
      oracle_cell = oracle_catalyzes(ctx.p, ctx.q, r) ? "catalyst" : "no";
    out << i << "," << csv_escape(cand) << ","
        << csv_escape(format_fraction(r.at1(1) / r.at1(r.dim()))) << ","
        << battery_cell << "," << oracle_cell << "\n";
  }
  return out.str();
}

inline Json run_mindim(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  if (!req.k_max) throw Error(ErrorCode::parse_error, "missing required option k_max");
  const MinDimensionReport report = min_catalyst_dimension_report(
      p, q, *req.k_max, req.grid_denominator.value_or(0), search_config(req));
  Json j;
  j["k_lower"] = report.k_lower;
  j["k_max"] = report.k_max;
  j["dimension"] = report.dimension ? Json(*report.dimension) : Json(nullptr);
  j["catalyst"] =
      report.catalyst ? vector_json(*report.catalyst) : Json(nullptr);
  j["note"] =
      "grid exhaustion certifies only grid nonexistence, not continuum "
      "nonexistence";
  Json searches = Json::array();
  for (const auto& outcome : report.searches) {
    Json sj;
    sj["k"] = outcome.grid.k;
    sj["denominator"] = outcome.grid.denominator;
    sj["found_total"] = outcome.found_total;
    sj["exhausted"] = outcome.exhausted;
    searches.push_back(sj);
  }
  j["searches"] = searches;
  return j;
}

inline Json run_pmax(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  Json j;
  j["plain"] = probability_json(p_max_plain(p, q));
  if (req.r) {
    const ProbVector r = ProbVector::from_strings(*req.r);
    j["catalytic"] = probability_json(p_max_catalytic(p, q, r));
  }
  return j;
}

inline Json run_distance(const CommandRequest& req) {
  return distance_json(majorization_distance(required_vector(req.p, "p"),
                                             required_vector(req.q, "q"),
                                             required_vector(req.r, "r")));
}

inline Json run_prop2(const CommandRequest& req) {
  const ProbVector p = required_vector(req.p, "p");
  const ProbVector q = required_vector(req.q, "q");
  const ProbVector r = required_vector(req.r, "r");
  Json j;
  j["p_max"] = probability_json(p_max_catalytic(p, q, r));
  j["distance"] = distance_json(majorization_distance(p, q, r));
  j["oracle"] = oracle_catalyzes(p, q, r);
  j["consistent"] = prop2_check(p, q, r);
  return j;
}

inline Json run_protocol(const CommandRequest& req) {
  if (!req.ensemble)
    throw Error(ErrorCode::parse_error,
                "protocol needs an ensemble (use --input FILE)");
  const EnsembleSpec spec = ensemble_from_json(*req.ensemble);
  Json j = protocol_json(protocol_feasible(spec));
  if (req.trace.value_or(false)) j["trace"] = trace_json(protocol_trace(spec));
  return j;
}

inline Json run_compare_filters(const CommandRequest& req) {
  const std::uint64_t samples = req.samples.value_or(10000);
  const std::uint64_t seed = req.seed.value_or(1);
  InstanceGen gen(seed);

  struct Confusion {
    std::uint64_t true_accepted = 0, true_rejected = 0;
    std::uint64_t false_accepted = 0, false_rejected = 0;
    void record(bool oracle, bool accepted) {
      if (oracle)
        (accepted ? true_accepted : true_rejected)++;
      else
        (accepted ? false_accepted : false_rejected)++;
    }
    Json to_json() const {
      Json j;
      j["oracle_true_accepted"] = true_accepted;
      j["oracle_true_rejected"] = true_rejected;
      j["oracle_false_accepted"] = false_accepted;
      j["oracle_false_rejected"] = false_rejected;
      return j;
    }
  };
  Confusion prop1, pra99;
  std::uint64_t oracle_true = 0;

  const int dims[] = {4, 5, 6};
  const int ks[] = {2, 3};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const int d = req.dim.value_or(dims[i % 3]);
    const int k = req.k.value_or(ks[(i / 3) % 2]);
    auto pair = gen.solvable_pair(d, 2520);
    if (!pair) throw Error(ErrorCode::invalid_grid, "sampling failed");
    const ProbVector r = gen.positive_vector(k, 360);
    const bool oracle = oracle_catalyzes(pair->p, pair->q, r);
    if (oracle) ++oracle_true;
    prop1.record(oracle, filter_prop1(pair->p, pair->q, r).accepted);
    pra99.record(oracle, filter_pra99(pair->p, pair->q, r).accepted);
  }

  Json j;
  j["samples"] = samples;
  j["seed"] = seed;
  j["oracle_true"] = oracle_true;
  Json filters;
  filters["PROP1"] = prop1.to_json();
  filters["PRA99_BASELINE"] = pra99.to_json();
  j["filters"] = filters;
  return j;
}

}  // namespace detail

/// Dispatches a request to the corresponding module. Exit codes: 0 computed,
/// 2 input error, 3 precondition violation. Output (including machine-readable
/// error objects) goes to the returned string, newline-terminated.
inline CommandResult run_request(const CommandRequest& req) {
  const bool csv = req.format.value_or("json") == "csv";
  try {
    if (req.format && *req.format != "json" && *req.format != "csv")
      throw Error(ErrorCode::parse_error, "format must be json or csv");

    if (req.subcommand == "search" && csv)
      return CommandResult{0, detail::run_search_csv(req)};

    Json out;
    if (req.subcommand == "check") out = detail::run_check(req);
    else if (req.subcommand == "lset") out = detail::run_lset(req);
    else if (req.subcommand == "reach") out = detail::run_reach(req);
    else if (req.subcommand == "filters") out = detail::run_filters(req);
    else if (req.subcommand == "bound") out = detail::run_bound(req);
    else if (req.subcommand == "search") out = detail::run_search(req);
    else if (req.subcommand == "mindim") out = detail::run_mindim(req);
    else if (req.subcommand == "pmax") out = detail::run_pmax(req);
    else if (req.subcommand == "distance") out = detail::run_distance(req);
    else if (req.subcommand == "prop2") out = detail::run_prop2(req);
    else if (req.subcommand == "protocol") out = detail::run_protocol(req);
    else if (req.subcommand == "compare-filters")
      out = detail::run_compare_filters(req);
    else
      throw Error(ErrorCode::parse_error,
                  "unknown subcommand '" + req.subcommand + "'");

    if (csv) return CommandResult{0, detail::key_value_csv(out)};
    return CommandResult{0, out.dump(2) + "\n"};
  } catch (const Error& e) {
    const int code = is_input_error(e.code()) ? 2 : 3;
    return CommandResult{code, error_json(e).dump(2) + "\n"};
  }
}

}  // namespace elocc
