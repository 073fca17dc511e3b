#include "onlinecut/regret.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "onlinecut/format.hpp"
#include "onlinecut/oracles.hpp"
#include "onlinecut/random.hpp"

namespace onlinecut {
namespace {

constexpr double kBudgetSlack = 1e-9;

CutResult mincut_under(const Graph& g, std::span<const double> w) {
  return stoer_wagner_mincut(g.with_weights(w));
}

bool same_edge_set(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v) return false;
  }
  return true;
}

}  // namespace

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight vectors differ in length");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double cut_under(const Graph& g, std::span<const double> w, std::uint64_t x_mask) {
  double total = 0.0;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (((x_mask >> edges[i].u) & 1U) != ((x_mask >> edges[i].v) & 1U)) total += w[i];
  }
  return total;
}

WeightSequence::WeightSequence(Graph base, std::vector<std::vector<double>> weights, double budget,
                               bool unbudgeted)
    : base_(std::move(base)), weights_(std::move(weights)), budget_(budget), unbudgeted_(unbudgeted) {
  if (weights_.empty()) throw std::invalid_argument("weight sequence needs at least one step");
  for (const auto& w : weights_) {
    if (w.size() != base_.edge_count()) {
      throw std::invalid_argument("each weight vector needs one entry per edge");
    }
    for (double x : w) {
      if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("weights must be >= 0");
    }
  }
  if (!unbudgeted_ && variation() > budget_ + kBudgetSlack) {
    throw std::invalid_argument("sequence variation " + format_number(variation()) +
                                " exceeds the declared budget " + format_number(budget_));
  }
}

double WeightSequence::variation() const {
  double v = 0.0;
  for (std::size_t t = 1; t < weights_.size(); ++t) v += l1_distance(weights_[t - 1], weights_[t]);
  return v;
}

RegretTrace ftco(const Graph& g, const WeightSequence& seq) {
  if (g.vertex_count() < 2) throw std::invalid_argument("ftco needs at least 2 vertices");
  // Only the edge set matters; weights come from the sequence.
  if (!same_edge_set(g, seq.base())) throw std::invalid_argument("sequence is not over this graph's edges");
  RegretTrace trace;
  trace.player = "ftco";
  const std::vector<double> ones(g.edge_count(), 1.0);
  CutResult previous = mincut_under(g, ones);
  trace.initial_opt = previous.value.value();
  double cum = 0.0, variation = 0.0;
  for (std::size_t t = 1; t <= seq.steps(); ++t) {
    const auto w = seq.at(t);
    if (t >= 2) variation += l1_distance(seq.at(t - 1), w);
    CutResult current = mincut_under(g, w);
    RegretStep step;
    step.t = t;
    step.played = previous.witness;
    step.played_value = cut_under(g, w, previous.witness.x_mask());
    step.opt_value = current.value.value();
    step.inst_regret = step.played_value - step.opt_value;
    cum += step.inst_regret;
    step.cum_regret = cum;
    step.variation_so_far = variation;
    trace.steps.push_back(std::move(step));
    previous = std::move(current);
  }
  return trace;
}

double regret(const RegretTrace& trace) {
  double played = 0.0, opt = 0.0;
  for (const RegretStep& s : trace.steps) {
    played += s.played_value;
    opt += s.opt_value;
  }
  return played - opt;
}

TelescopingCheck telescoping_identity_check(const RegretTrace& trace, const WeightSequence& seq,
                                            double tol) {
  if (trace.player != "ftco" || trace.steps.size() != seq.steps() || trace.steps.empty()) {
    throw std::invalid_argument("telescoping check needs an ftco trace over this sequence");
  }
  const Graph& g = seq.base();
  const std::vector<double> ones(g.edge_count(), 1.0);
  TelescopingCheck check;
  check.lhs = regret(trace);
  check.variation = seq.variation();
  check.initial_drift = l1_distance(ones, seq.at(1));
  double prev_opt = trace.initial_opt;
  for (std::size_t t = 1; t <= seq.steps(); ++t) {
    const std::uint64_t mask = trace.steps[t - 1].played.x_mask();
    const auto before = t == 1 ? std::span<const double>(ones) : seq.at(t - 1);
    const auto after = seq.at(t);
    // The played cut must be optimal for the previous weights.
    if (std::abs(cut_under(g, before, mask) - prev_opt) > tol) {
      throw std::invalid_argument("trace step " + std::to_string(t) +
                                  " did not play a minimum cut of the previous weights");
    }
    double delta = 0.0;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (((mask >> edges[i].u) & 1U) != ((mask >> edges[i].v) & 1U)) delta += after[i] - before[i];
    }
    check.sum_delta += delta;
    if (t == 1) {
      check.initial_delta = delta;
    } else {
      check.tail_delta += delta;
    }
    prev_opt = trace.steps[t - 1].opt_value;
  }
  check.rhs = trace.initial_opt - trace.steps.back().opt_value + check.sum_delta;
  check.equal = std::abs(check.lhs - check.rhs) <= tol;
  check.tail_within_variation = check.tail_delta <= check.variation + tol;
  check.initial_within_drift = check.initial_delta <= check.initial_drift + tol;
  return check;
}

double ftco_regret_bound(const TelescopingCheck& check, double initial_opt) {
  return check.variation + initial_opt + std::max(0.0, check.initial_delta);
}

WeightSequence path_adversary(std::size_t n, std::span<const double> eps, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("path adversary needs n >= 2");
  if (eps.empty()) throw std::invalid_argument("path adversary needs T >= 1");
  Graph g = path_graph(n);
  std::vector<std::vector<double>> weights;
  weights.reserve(eps.size());
  double budget = 0.0;
  Rng rng = make_rng(seed, "path-adversary");
  for (std::size_t t = 0; t < eps.size(); ++t) {
    if (!(eps[t] >= 0.0 && eps[t] <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");
    std::vector<double> w(n - 1, 1.0);
    w[uniform_index(rng, n - 1)] = 1.0 - eps[t];
    weights.push_back(std::move(w));
    budget += 2.0 * eps[t];
  }
  return WeightSequence(std::move(g), std::move(weights), budget);
}

std::vector<VertexId> path_vertex_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) throw std::invalid_argument("graph is not a path");
  VertexId start = static_cast<VertexId>(n);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t d = g.neighbors(v).size();
    if (d == 0 || d > 2) throw std::invalid_argument("graph is not a path");
    if (d == 1 && start == n) start = v;
  }
  if (start == n) throw std::invalid_argument("graph is not a path");
  std::vector<VertexId> order = {start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (order.size() < n) {
    bool moved = false;
    for (const Neighbor& nb : g.neighbors(order.back())) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        order.push_back(nb.vertex);
        moved = true;
        break;
      }
    }
    if (!moved) throw std::invalid_argument("graph is not a path");
  }
  return order;
}

RegretTrace uniform_edge_player(const Graph& path, const WeightSequence& seq, std::uint64_t seed) {
  const std::vector<VertexId> line = path_vertex_order(path);
  const std::size_t n = line.size();
  const std::size_t m = path.edge_count();
  if (!same_edge_set(path, seq.base())) throw std::invalid_argument("sequence is not over this path");
  // Cutting the j-th edge along the line puts line[0..j] on one side.
  std::vector<std::uint64_t> masks(m);
  std::uint64_t prefix = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    prefix |= std::uint64_t{1} << line[j];
    masks[j] = prefix;
  }
  RegretTrace trace;
  trace.player = "uniform-edge";
  Rng rng = make_rng(seed, "uniform-edge-player");
  double cum = 0.0, variation = 0.0;
  for (std::size_t t = 1; t <= seq.steps(); ++t) {
    const auto w = seq.at(t);
    if (t >= 2) variation += l1_distance(seq.at(t - 1), w);
    const std::uint64_t mask = masks[uniform_index(rng, m)];
    RegretStep step;
    step.t = t;
    step.played = CutAssignment::from_x_mask(n, mask);
    step.played_value = cut_under(path, w, mask);
    // On a path every single edge is a cut and every cut contains one.
    step.opt_value = *std::min_element(w.begin(), w.end());
    step.inst_regret = step.played_value - step.opt_value;
    cum += step.inst_regret;
    step.cum_regret = cum;
    step.variation_so_far = variation;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

double uniform_edge_expected_regret(const Graph& path, const WeightSequence& seq) {
  path_vertex_order(path);
  double total = 0.0;
  for (std::size_t t = 1; t <= seq.steps(); ++t) {
    const auto w = seq.at(t);
    double sum = 0.0;
    for (double x : w) sum += x;
    total += sum / static_cast<double>(w.size()) - *std::min_element(w.begin(), w.end());
  }
  return total;
}

WeightSequence coinflip_p3_adversary(std::size_t T, std::uint64_t seed) {
  if (T == 0) throw std::invalid_argument("coinflip adversary needs T >= 1");
  std::vector<std::vector<double>> weights;
  weights.reserve(T);
  Rng rng = make_rng(seed, "coinflip-p3");
  for (std::size_t t = 0; t < T; ++t) {
    weights.push_back(bernoulli(rng, 0.5) ? std::vector<double>{1.0, 0.0}
                                          : std::vector<double>{0.0, 1.0});
  }
  return WeightSequence(path_graph(3), std::move(weights), 2.0 * static_cast<double>(T - 1), true);
}

WeightSequence random_budgeted_sequence(const Graph& g, std::size_t T, double budget,
                                        std::uint64_t seed) {
  if (T == 0) throw std::invalid_argument("sequence needs T >= 1");
  if (!(budget >= 0.0)) throw std::invalid_argument("budget must be >= 0");
  const std::size_t m = g.edge_count();
  Rng rng = make_rng(seed, "budgeted-sequence");
  std::vector<std::vector<double>> weights;
  weights.reserve(T);
  std::vector<double> w(m);
  for (double& x : w) x = uniform01(rng);
  weights.push_back(w);
  const double step = T > 1 ? budget / static_cast<double>(T - 1) : 0.0;
  for (std::size_t t = 1; t < T; ++t) {
    if (m > 0) {
      const std::size_t e = uniform_index(rng, m);
      const double delta = (2.0 * uniform01(rng) - 1.0) * step;
      w[e] = std::clamp(w[e] + delta, 0.0, 1.0);
    }
    weights.push_back(w);
  }
  return WeightSequence(g, std::move(weights), budget);
}

WeightSequence constant_sequence(const Graph& g, std::size_t T) {
  return WeightSequence(g, std::vector<std::vector<double>>(T, std::vector<double>(g.edge_count(), 1.0)),
                        0.0);
}

void write_sequence_json(std::ostream& out, const WeightSequence& seq) {
  nlohmann::json j;
  j["n"] = seq.base().vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : seq.base().edges()) j["edges"].push_back({e.u, e.v});
  j["budget"] = seq.budget();
  j["unbudgeted"] = seq.unbudgeted();
  j["weights"] = nlohmann::json::array();
  for (std::size_t t = 1; t <= seq.steps(); ++t) {
    const auto w = seq.at(t);
    j["weights"].push_back(std::vector<double>(w.begin(), w.end()));
  }
  out << j.dump() << '\n';
}

WeightSequence read_sequence_json(std::istream& in) {
  const nlohmann::json j = nlohmann::json::parse(in);
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>(), 1.0});
  Graph base(j.at("n").get<std::size_t>(), edges);
  if (base.edge_count() != edges.size()) throw std::invalid_argument("sequence edge list has duplicates");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (base.edges()[i].u != edges[i].u || base.edges()[i].v != edges[i].v) {
      throw std::invalid_argument("sequence edges must be listed as u<v in ascending order");
    }
  }
  return WeightSequence(std::move(base), j.at("weights").get<std::vector<std::vector<double>>>(),
                        j.at("budget").get<double>(), j.value("unbudgeted", false));
}

void write_trace_csv(std::ostream& out, const RegretTrace& trace) {
  out << "t,played_value,opt_value,inst_regret,cum_regret,variation_so_far\n";
  for (const RegretStep& s : trace.steps) {
    out << s.t << ',' << format_number(s.played_value) << ',' << format_number(s.opt_value) << ','
        << format_number(s.inst_regret) << ',' << format_number(s.cum_regret) << ','
        << format_number(s.variation_so_far) << '\n';
  }
}

}  // namespace onlinecut
