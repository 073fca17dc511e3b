// onlinecut command line: oracles, instance generation, single runs and sweeps.
// Exit status is 0 iff every acceptance predicate of the command passed.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "onlinecut/adversaries.hpp"
#include "onlinecut/advice.hpp"
#include "onlinecut/algorithms.hpp"
#include "onlinecut/format.hpp"
#include "onlinecut/greedy_order.hpp"
#include "onlinecut/harness.hpp"
#include "onlinecut/oracles.hpp"
#include "onlinecut/regret.hpp"

using namespace onlinecut;

namespace {

// Shared flags are kept as raw strings and parsed by the config setter, so
// numeric validation is the same for flags and config files.
struct Flags {
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;

  void add(CLI::App* app, const std::vector<std::string>& keys) {
    for (const auto& key : keys) {
      const std::string flag = key == "algs" ? "--alg" : "--" + key;
      opts[key] = app->add_option(flag, raw[key]);
    }
  }
  bool has(const std::string& key) const {
    const auto it = opts.find(key);
    return it != opts.end() && it->second->count() > 0;
  }
  void apply(ExperimentConfig& c) const {
    for (const auto& [key, opt] : opts)
      if (opt->count() > 0) apply_setting(c, key, raw.at(key));
  }
};

const std::vector<std::string> kAllKeys{"graph", "family", "n",     "k",      "p",
                                        "eps",   "prob",   "algs",  "samples", "seed",
                                        "steps", "budget", "trials", "out",   "threads"};

Graph need_graph(const ExperimentConfig& c) {
  if (c.graph.empty()) throw std::invalid_argument("--graph is required");
  return read_graph_file(c.graph);
}

std::string side_list(const CutAssignment& a, Side s) {
  std::string out;
  for (VertexId v : a.members(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string single_alg(const ExperimentConfig& c, const std::string& fallback) {
  if (c.algs.empty()) return fallback;
  if (c.algs.size() != 1) throw std::invalid_argument("expected a single --alg");
  return c.algs.front();
}

int cmd_oracle(const ExperimentConfig& c, const std::string& kind) {
  const Graph g = need_graph(c);
  CutResult r;
  if (kind == "mincut") r = brute_force_mincut(g);
  else if (kind == "maxcut") r = brute_force_maxcut(g);
  else if (kind == "stoer-wagner") r = stoer_wagner_mincut(g);
  else throw std::invalid_argument("--kind must be mincut, maxcut or stoer-wagner");
  std::cout << "value " << to_string(r.value) << "\n";
  if (r.witness.size()) std::cout << "X " << side_list(r.witness, Side::X) << "\n";
  return 0;
}

int cmd_family(const ExperimentConfig& c, const std::string& labels_text) {
  std::vector<bool> labels;
  for (char ch : labels_text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("--labels takes a 0/1 string");
    labels.push_back(ch == '1');
  }
  FamilyInstance inst;
  const std::string& f = c.family;
  const auto labels_for = [&](std::size_t count) {
    if (labels.empty()) labels.assign(count, false);
    return labels;
  };
  if (f == "thm1a") inst = gen_thm1a(c.n);
  else if (f == "thm1b") inst = gen_thm1b(c.n, c.k);
  else if (f == "fig1") inst = gen_fig1(c.n, labels_for(c.n >= 4 ? c.n - 4 : 0));
  else if (f == "fig2") inst = gen_fig2(c.n, c.p, c.k, labels_for(c.n >= 2 * c.p ? c.n - 2 * c.p : 0));
  else if (f == "fig2-balanced") inst = gen_fig2_balanced(c.n, c.eps, c.k);
  else if (f == "gnp") inst.graph = gen_gnp(c.n, c.prob, c.seed);
  else if (f == "path") inst.graph = path_graph(c.n);
  else if (f == "cycle") inst.graph = cycle_graph(c.n);
  else if (f == "complete") inst.graph = complete_graph(c.n);
  else if (f == "star") inst.graph = star_graph(c.n ? c.n - 1 : 0);
  else
    throw std::invalid_argument(
        "--family must be thm1a, thm1b, fig1, fig2, fig2-balanced, gnp, path, cycle, complete "
        "or star");
  if (inst.order.size() == 0) inst.order = ArrivalOrder::identity(inst.graph.vertex_count());
  nlohmann::json side = {{"family", f},       {"n", inst.graph.vertex_count()},
                         {"m", inst.graph.edge_count()}, {"k", c.k},
                         {"p", c.p},        {"eps", c.eps},
                         {"prob", c.prob},  {"seed", c.seed},
                         {"order", inst.order.to_string()}, {"roles", inst.roles}};
  if (c.out.empty() || c.out == "-") {
    write_graph(std::cout, inst.graph);
    std::cerr << side.dump(2) << "\n";
  } else {
    write_graph_file(c.out, inst.graph);
    std::ofstream out(c.out + ".json");
    if (!out) throw std::runtime_error("cannot write " + c.out + ".json");
    out << side.dump(2) << "\n";
  }
  return 0;
}

int cmd_run(const ExperimentConfig& c, const std::string& order_text, const std::string& mode) {
  const Graph g = need_graph(c);
  const auto alg = make_algorithm(single_alg(c, "greedy-min"));
  if (mode == "single") {
    const ArrivalOrder order =
        order_text.empty() ? ArrivalOrder::identity(g.vertex_count()) : ArrivalOrder::parse(order_text);
    const RunRecord rec = run(g, order, *alg);
    std::cout << "alg " << alg->name() << "\norder " << order.to_string() << "\nvalue "
              << to_string(rec.value) << "\nX " << side_list(rec.assignment, Side::X) << "\n";
    return 0;
  }
  const bool exhaustive = g.vertex_count() <= kOrderEnumerationCap;
  if (mode == "worst" || mode == "best") {
    const auto search = exhaustive ? OrderSearch::exhaustive() : OrderSearch::sampled(c.samples, c.seed);
    const auto r = mode == "worst" ? worst_case_value(g, *alg, search) : best_case_value(g, *alg, search);
    std::cout << mode << " " << format_number(r.value) << "\nwitness " << r.witness.to_string()
              << "\nmode " << to_string(r.mode) << "\nruns " << r.runs << "\n";
    return 0;
  }
  if (mode == "expect") {
    const auto m = exhaustive ? ExpectationMode::exhaustive()
                              : ExpectationMode::monte_carlo(c.samples, c.seed, c.threads);
    const auto e = expected_value_random_order(g, *alg, m);
    std::cout << "mean " << format_number(e.mean) << "\nse " << format_number(e.std_error)
              << "\nexact " << (e.exact ? "true" : "false") << "\nruns " << e.runs << "\n";
    return 0;
  }
  throw std::invalid_argument("--mode must be single, worst, best or expect");
}

int cmd_regret(const ExperimentConfig& c, const std::string& sequence_path,
               const std::string& player) {
  WeightSequence seq;
  Graph g;
  if (!sequence_path.empty()) {
    std::ifstream in(sequence_path);
    if (!in) throw std::runtime_error("cannot open " + sequence_path);
    seq = read_sequence_json(in);
    g = seq.base();
  } else if (player == "uniform-edge") {
    g = path_graph(c.n);
    seq = path_adversary(c.n, std::vector<double>(c.steps, c.eps), c.seed);
  } else {
    g = need_graph(c);
    seq = random_budgeted_sequence(g, c.steps, c.budget, c.seed);
  }
  bool ok = true;
  RegretTrace trace;
  if (player == "ftco") {
    trace = ftco(g, seq);
    const auto check = telescoping_identity_check(trace, seq);
    const double bound = seq.variation() + trace.initial_opt;
    std::cout << "identity " << (check.passed() ? "pass" : "fail") << "\nbound "
              << format_number(bound) << "\n";
    ok = check.passed() && regret(trace) <= bound + 1e-9 * std::max(1.0, bound);
  } else if (player == "uniform-edge") {
    trace = uniform_edge_player(g, seq, c.seed);
    std::cout << "expected " << format_number(uniform_edge_expected_regret(g, seq)) << "\n";
  } else {
    throw std::invalid_argument("--player must be ftco or uniform-edge");
  }
  std::cout << "regret " << format_number(regret(trace)) << "\nvariation "
            << format_number(seq.variation()) << "\n";
  if (!c.out.empty()) {
    std::ofstream out(c.out);
    if (!out) throw std::runtime_error("cannot write " + c.out);
    write_trace_csv(out, trace);
  }
  return ok ? 0 : 1;
}

int cmd_advice(const ExperimentConfig& c, const std::string& order_text, const std::string& scheme,
               const std::string& bits) {
  const Graph g = need_graph(c);
  const ArrivalOrder order =
      order_text.empty() ? ArrivalOrder::identity(g.vertex_count()) : ArrivalOrder::parse(order_text);
  AdviceScheme s;
  if (scheme == "optimal") s = optimal_advice_scheme();
  else if (scheme == "min-degree") s = min_degree_scheme();
  else if (scheme == "truncated") s = truncated_optimal_scheme(std::stoul(bits));
  else throw std::invalid_argument("--scheme must be optimal, min-degree or truncated");
  const AdviceTape tape = s.tapes(g, order);
  const RunRecord rec = run(g, order, *s.algorithm, tape);
  const double opt = brute_force_mincut(g).value.value();
  const nlohmann::json j = {{"scheme", scheme},
                            {"order", order.to_string()},
                            {"tape", {{"hex", tape.to_hex()}, {"bits", tape.length()}}},
                            {"bits_read", rec.advice_bits},
                            {"value", rec.value.value()},
                            {"opt", opt}};
  std::cout << j.dump(2) << "\n";
  if (scheme == "truncated") return 0;
  const double target = scheme == "optimal" ? opt : degree_stats(g).min_degree;
  return rec.value.value() == target ? 0 : 1;
}

int cmd_permsearch(const ExperimentConfig& c) {
  const Graph g = need_graph(c);
  const std::string key = single_alg(c, "greedy-min");
  const auto alg = make_algorithm(key);
  const bool maximize = key.rfind("greedy-max", 0) == 0;
  const double target = maximize ? brute_force_maxcut(g).value.value()
                                 : brute_force_mincut(g).value.value();
  const auto s = verify_min_over_orders(g, *alg, target,
                                        maximize ? Objective::Maximize : Objective::Minimize);
  const nlohmann::json j = {{"alg", key},
                            {"objective", maximize ? "max" : "min"},
                            {"best", s.best},
                            {"target", target},
                            {"witness", s.witness.to_string()},
                            {"orders", s.orders_evaluated},
                            {"matches", s.matches}};
  std::cout << j.dump(2) << "\n";
  return s.matches ? 0 : 1;
}

int cmd_sweep(ExperimentConfig c, const Flags& flags, bool quiet) {
  flags.apply(c);
  const auto result = run_scenario(c);
  emit_report(result, c.out);
  if (!quiet) {
    std::cout << "scenario " << c.scenario << "\nrows " << result.rows.size() << "\n";
    for (const auto& [key, value] : result.stats)
      std::cout << key << " " << format_number(value) << "\n";
    for (const auto& note : result.notes) std::cout << "note " << note << "\n";
    std::cout << "predicate " << result.predicate << "\n";
  }
  std::cout << (result.passed ? "PASS " : "FAIL ") << c.scenario << "\n";
  return result.passed ? 0 : 1;
}

int cmd_report(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > 13 && name.ends_with("_summary.json")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no summaries in " << dir << "\n";
    return 1;
  }
  bool all = true;
  for (const auto& path : files) {
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    const bool passed = j.at("passed").get<bool>();
    all = all && passed;
    std::cout << (passed ? "PASS " : "FAIL ") << j.at("scenario").get<std::string>() << " ("
              << j.at("rows").get<std::size_t>() << " rows)\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online minimum cut laboratory"};
  app.require_subcommand(1);

  Flags oracle_flags, family_flags, run_flags, sweep_flags, regret_flags, advice_flags,
      perm_flags;
  std::string kind = "mincut", labels, order, mode = "single", config_path, scenario,
              sequence, player = "ftco", scheme = "optimal", bits = "0", report_dir = "results";
  bool quiet = false;

  auto* oracle = app.add_subcommand("oracle", "exact minimum or maximum cut of a graph file");
  oracle_flags.add(oracle, {"graph"});
  oracle->add_option("--kind", kind, "mincut | maxcut | stoer-wagner");

  auto* family = app.add_subcommand("family", "instance families");
  auto* gen = family->add_subcommand("gen", "write one family instance as a graph file");
  family->require_subcommand(1);
  family_flags.add(gen, {"family", "n", "k", "p", "eps", "prob", "seed", "out"});
  gen->add_option("--labels", labels, "prefix labels for fig1/fig2 as a 0/1 string");

  auto* runc = app.add_subcommand("run", "run one algorithm on a graph file");
  run_flags.add(runc, {"graph", "algs", "samples", "seed", "threads"});
  runc->add_option("--order", order, "comma-separated arrival order");
  runc->add_option("--mode", mode, "single | worst | best | expect");

  auto* sweep = app.add_subcommand("sweep", "run a scenario sweep and write CSV/JSON reports");
  sweep->add_option("scenario", scenario, "scenario name")->required();
  sweep->add_option("--config", config_path, "config file (flags override its keys)");
  sweep->add_flag("--quiet", quiet);
  sweep_flags.add(sweep, kAllKeys);

  auto* regretc = app.add_subcommand("regret", "FTCO or the uniform-edge player on a sequence");
  regret_flags.add(regretc, {"graph", "n", "eps", "steps", "budget", "seed", "out"});
  regretc->add_option("--sequence", sequence, "weight sequence JSON");
  regretc->add_option("--player", player, "ftco | uniform-edge");

  auto* advicec = app.add_subcommand("advice", "advice tape and advised run on a graph file");
  advice_flags.add(advicec, {"graph"});
  advicec->add_option("--order", order, "comma-separated arrival order");
  advicec->add_option("--scheme", scheme, "optimal | min-degree | truncated");
  advicec->add_option("--b", bits, "advice budget for the truncated scheme");

  auto* perm = app.add_subcommand("permsearch", "best greedy value over all arrival orders");
  perm_flags.add(perm, {"graph", "algs"});

  auto* report = app.add_subcommand("report", "summarize the JSON summaries in a directory");
  report->add_option("--out", report_dir, "results directory");

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig c;
    c.out.clear();
    c.n = 8;
    c.k = 1;
    c.p = 4;
    c.eps = 0.25;
    c.prob = 0.5;
    c.samples = 100000;
    c.seed = 1;
    c.steps = 100;
    c.budget = 5.0;
    if (oracle->parsed()) {
      oracle_flags.apply(c);
      return cmd_oracle(c, kind);
    }
    if (gen->parsed()) {
      family_flags.apply(c);
      return cmd_family(c, labels);
    }
    if (runc->parsed()) {
      run_flags.apply(c);
      return cmd_run(c, order, mode);
    }
    if (sweep->parsed()) {
      ExperimentConfig base = config_path.empty() ? default_config(scenario) : load_config(config_path);
      if (base.scenario != scenario)
        throw std::invalid_argument("config is for scenario '" + base.scenario + "'");
      return cmd_sweep(base, sweep_flags, quiet);
    }
    if (regretc->parsed()) {
      regret_flags.apply(c);
      return cmd_regret(c, sequence, player);
    }
    if (advicec->parsed()) {
      advice_flags.apply(c);
      return cmd_advice(c, order, scheme, bits);
    }
    if (perm->parsed()) {
      perm_flags.apply(c);
      return cmd_permsearch(c);
    }
    if (report->parsed()) return cmd_report(report_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
