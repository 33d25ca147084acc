// elocc: LOCC convertibility, entanglement-catalyst filtering and search on
// exact Schmidt vectors. Every subcommand reads vectors as comma-separated
// exact entries ("0.4,0.35,0.15,0.1" or "2/5,7/20,3/20,1/10") and writes a
// JSON document (or CSV with --format csv) to standard output.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "elocc/cli.hpp"

namespace {

std::vector<std::string> split_entries(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::optional<long long> env_int(const std::string& name) {
  const char* value = std::getenv(name.c_str());
  if (!value || !*value) return std::nullopt;
  try {
    return std::stoll(value);
  } catch (...) {
    return std::nullopt;
  }
}

struct FlagState {
  std::string p, q, r;
  int t = 0, s = 0, k = 0, k_max = 0, workers = 0, dim = 0;
  long long grid_denominator = 0;
  std::uint64_t max_results = 0, t2_cap = 0, samples = 0, seed = 0;
  bool no_filters = false, zeros = false, trace = false;
  bool no_subset_mode = false, short_circuit = false;
  std::string format, input;
};

void add_vector_option(CLI::App* cmd, FlagState& flags, bool with_q, bool with_r) {
  cmd->add_option("-p,--p", flags.p, "source Schmidt vector, comma-separated");
  if (with_q) cmd->add_option("-q,--q", flags.q, "target Schmidt vector");
  if (with_r) cmd->add_option("-r,--r", flags.r, "catalyst Schmidt vector");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact majorization, LOCC convertibility and entanglement-catalyst "
      "toolkit"};
  app.require_subcommand(1);

  FlagState flags;
  app.add_option("--input", flags.input,
                 "load a request (JSON) and overlay any flags given here")
      ->expected(1);
  app.add_option("--format", flags.format, "output format: json (default) or csv");

  auto* check = app.add_subcommand("check", "LOCC convertibility and classification");
  add_vector_option(check, flags, true, false);

  auto* lset = app.add_subcommand("lset", "the index set L and its extremes");
  add_vector_option(lset, flags, true, false);

  auto* reach = app.add_subcommand("reach", "rank-t reachability tests");
  add_vector_option(reach, flags, false, false);
  reach->add_option("-t,--t", flags.t, "target Schmidt rank");
  reach->add_option("-s,--s", flags.s, "tail size for the sufficient condition");

  auto* filters = app.add_subcommand(
      "filters", "necessary-condition battery on a candidate catalyst");
  add_vector_option(filters, flags, true, true);
  filters->add_option("--t2-cap", flags.t2_cap, "sequence enumeration cap");
  filters->add_flag("--no-subset-mode", flags.no_subset_mode,
                    "restrict the sequence filter to the full set L");
  filters->add_flag("--short-circuit", flags.short_circuit,
                    "stop the battery at the first reject");

  auto* bound = app.add_subcommand(
      "bound", "catalyst dimension lower bound and the 2-dim feasible interval");
  add_vector_option(bound, flags, true, false);

  auto* search = app.add_subcommand("search", "exhaustive grid search for catalysts");
  add_vector_option(search, flags, true, false);
  search->add_option("-k,--k", flags.k, "catalyst dimension (default 2)");
  search->add_option("-D,--denominator", flags.grid_denominator,
                     "grid denominator (default per k; env ELOCC_GRID_D<k>)");
  search->add_flag("--no-filters", flags.no_filters, "skip filter pruning");
  search->add_option("--max-results", flags.max_results,
                     "keep at most this many catalysts (0 = all)");
  search->add_flag("--zeros", flags.zeros, "include boundary candidates with zeros");
  search->add_option("--workers", flags.workers,
                     "worker threads (env ELOCC_WORKERS; default 1)");
  search->add_option("--t2-cap", flags.t2_cap, "sequence enumeration cap");

  auto* mindim = app.add_subcommand(
      "mindim", "smallest catalyst dimension with a grid catalyst");
  add_vector_option(mindim, flags, true, false);
  mindim->add_option("--k-max", flags.k_max, "largest dimension to try")->required();
  mindim->add_option("-D,--denominator", flags.grid_denominator,
                     "grid denominator for every k (default per k)");
  mindim->add_option("--workers", flags.workers, "worker threads");

  auto* pmax = app.add_subcommand(
      "pmax", "maximal conversion probability, plain and catalytic");
  add_vector_option(pmax, flags, true, true);

  auto* distance = app.add_subcommand("distance", "modified majorization distance");
  add_vector_option(distance, flags, true, true);

  auto* prop2 = app.add_subcommand(
      "prop2", "P_max = 1 / delta = 0 / oracle equivalence for one triple");
  add_vector_option(prop2, flags, true, true);

  auto* protocol = app.add_subcommand(
      "protocol", "mixed-state ensemble conversion checker (--input FILE)");
  protocol->add_flag("--trace", flags.trace, "emit the step-by-step trace");

  auto* compare = app.add_subcommand(
      "compare-filters", "empirical confusion summary of PROP1 vs PRA99");
  compare->add_option("-N,--samples", flags.samples, "sample count (default 10000)");
  compare->add_option("--seed", flags.seed, "generator seed (default 1)");
  compare->add_option("--dim", flags.dim, "fix the pair dimension (default: cycle 4,5,6)");
  compare->add_option("-k,--k", flags.k, "fix the catalyst dimension (default: cycle 2,3)");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  elocc::CommandRequest req;
  try {
    if (!flags.input.empty()) {
      std::ifstream in(flags.input);
      if (!in)
        throw elocc::Error(elocc::ErrorCode::parse_error,
                           "cannot open input file " + flags.input);
      elocc::Json j = elocc::Json::parse(in, nullptr, true);
      // a bare ensemble object is accepted directly for `protocol`
      if (j.is_object() && j.contains("subcommand"))
        req = elocc::request_from_json(j);
      else
        req.ensemble = j;
    }

    CLI::App* sub = app.get_subcommands().front();
    req.subcommand = sub->get_name();

    auto set_if = [](bool given, auto& field, auto value) {
      if (given) field = value;
    };
    set_if(!flags.p.empty(), req.p, split_entries(flags.p));
    set_if(!flags.q.empty(), req.q, split_entries(flags.q));
    set_if(!flags.r.empty(), req.r, split_entries(flags.r));
    set_if(reach->count("-t") > 0, req.t, flags.t);
    set_if(reach->count("-s") > 0, req.s, flags.s);
    set_if(search->count("-k") > 0 || compare->count("-k") > 0, req.k, flags.k);
    set_if(search->count("-D") > 0 || mindim->count("-D") > 0,
           req.grid_denominator, flags.grid_denominator);
    set_if(mindim->count("--k-max") > 0, req.k_max, flags.k_max);
    set_if(flags.no_filters, req.use_filters, false);
    set_if(search->count("--max-results") > 0, req.max_results, flags.max_results);
    set_if(search->count("--workers") > 0 || mindim->count("--workers") > 0,
           req.workers, flags.workers);
    set_if(search->count("--t2-cap") > 0 || filters->count("--t2-cap") > 0,
           req.t2_cap, flags.t2_cap);
    set_if(flags.no_subset_mode, req.subset_mode, false);
    set_if(flags.short_circuit, req.short_circuit, true);
    set_if(compare->count("-N") > 0, req.samples, flags.samples);
    set_if(compare->count("--seed") > 0, req.seed, flags.seed);
    set_if(compare->count("--dim") > 0, req.dim, flags.dim);
    set_if(flags.zeros, req.include_zeros, true);
    set_if(flags.trace, req.trace, true);
    set_if(!flags.format.empty(), req.format, flags.format);

    // environment defaults
    if (!req.workers)
      if (auto w = env_int("ELOCC_WORKERS")) req.workers = static_cast<int>(*w);
    if (!req.grid_denominator && (req.subcommand == "search")) {
      const int k = req.k.value_or(2);
      if (auto d = env_int("ELOCC_GRID_D" + std::to_string(k)))
        req.grid_denominator = *d;
    }
  } catch (const elocc::Error& e) {
    std::cout << elocc::error_json(e).dump(2) << "\n";
    return elocc::is_input_error(e.code()) ? 2 : 3;
  }

  const elocc::CommandResult result = elocc::run_request(req);
  std::cout << result.output;
  return result.exit_code;
}
