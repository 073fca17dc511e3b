#pragma once

// Min cut under time-varying edge weights: weight sequences with a
// variational budget, follow-the-current-optimal (FTCO), the regret
// identity, and the path adversary / uniform-edge player pair.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "onlinecut/graph.hpp"

namespace onlinecut {

/// w_1..w_T over a fixed edge set (the base graph's edges() order).
class WeightSequence {
 public:
  WeightSequence() = default;
  /// Throws std::invalid_argument on negative weights, wrong lengths, or
  /// variation above the budget (unless `unbudgeted`).
  WeightSequence(Graph base, std::vector<std::vector<double>> weights, double budget,
                 bool unbudgeted = false);

  const Graph& base() const { return base_; }
  std::size_t steps() const { return weights_.size(); }
  /// Weights at step t, 1-based as in the regret sum.
  std::span<const double> at(std::size_t t) const { return weights_.at(t - 1); }
  double budget() const { return budget_; }
  bool unbudgeted() const { return unbudgeted_; }

  /// Sum over t of ||w_t - w_{t+1}||_1.
  double variation() const;

 private:
  Graph base_;
  std::vector<std::vector<double>> weights_;
  double budget_ = 0.0;
  bool unbudgeted_ = false;
};

double l1_distance(std::span<const double> a, std::span<const double> b);

/// Weight of the cut given by an X-side mask under edge weights w.
double cut_under(const Graph& g, std::span<const double> w, std::uint64_t x_mask);

struct RegretStep {
  std::size_t t = 0;
  CutAssignment played;
  double played_value = 0.0;
  double opt_value = 0.0;
  double inst_regret = 0.0;
  double cum_regret = 0.0;
  double variation_so_far = 0.0;  // sum of ||w_s - w_{s+1}||_1 for s < t
};

struct RegretTrace {
  std::string player;
  std::vector<RegretStep> steps;
  /// C_0(X_0*) under the dummy all-ones weights (FTCO only).
  double initial_opt = 0.0;
};

/// Plays a Stoer-Wagner minimum cut of w_{t-1} at step t, with w_0 = 1.
RegretTrace ftco(const Graph& g, const WeightSequence& seq);

/// Sum of played values minus sum of per-step optima.
double regret(const RegretTrace& trace);

struct TelescopingCheck {
  double lhs = 0.0;  // regret
  double rhs = 0.0;  // C_0* - C_T* + sum of delta C_t
  bool equal = false;
  double sum_delta = 0.0;
  double initial_delta = 0.0;  // delta C_1, against the dummy w_0
  double tail_delta = 0.0;     // sum of delta C_t for t >= 2
  double variation = 0.0;
  double initial_drift = 0.0;  // ||w_0 - w_1||_1
  bool tail_within_variation = false;
  bool initial_within_drift = false;
  bool passed() const { return equal && tail_within_variation && initial_within_drift; }
};

/// Recomputes every delta C_t edge by edge from the sequence and checks the
/// telescoped form of the regret. Throws std::invalid_argument for traces
/// not produced by ftco on this sequence.
TelescopingCheck telescoping_identity_check(const RegretTrace& trace, const WeightSequence& seq,
                                            double tol = 1e-9);

/// variation + C_0* + max(0, delta C_1). With weights in [0, 1] the last
/// term is 0 and this is the textbook V_T + mincut(g, 1).
double ftco_regret_bound(const TelescopingCheck& check, double initial_opt);

/// Path P_n; at step t one uniform edge gets weight 1 - eps[t-1], the rest
/// weight 1. Declared budget 2 * sum(eps).
WeightSequence path_adversary(std::size_t n, std::span<const double> eps, std::uint64_t seed);

/// Vertices of a path graph from one end to the other; throws
/// std::invalid_argument when g is not a path.
std::vector<VertexId> path_vertex_order(const Graph& g);

/// Cuts one uniformly random path edge per step.
RegretTrace uniform_edge_player(const Graph& path, const WeightSequence& seq, std::uint64_t seed);

/// E[regret] of uniform_edge_player in closed form: sum over t of the mean
/// edge weight minus the minimum edge weight.
double uniform_edge_expected_regret(const Graph& path, const WeightSequence& seq);

/// Each step independently w_A = (1, 0) or w_B = (0, 1) on P3. Flagged
/// unbudgeted; the declared budget is 2(T-1).
WeightSequence coinflip_p3_adversary(std::size_t T, std::uint64_t seed);

/// Weights in [0, 1]: w_1 uniform, then each step moves one random edge by
/// at most budget/(T-1). Variation never exceeds the budget.
WeightSequence random_budgeted_sequence(const Graph& g, std::size_t T, double budget,
                                        std::uint64_t seed);

/// T copies of the all-ones weight vector.
WeightSequence constant_sequence(const Graph& g, std::size_t T);

// JSON: {"n":..,"edges":[[u,v],..],"budget":..,"unbudgeted":..,"weights":[[..],..]}
void write_sequence_json(std::ostream& out, const WeightSequence& seq);
WeightSequence read_sequence_json(std::istream& in);

/// Trace CSV with columns t,played_value,opt_value,inst_regret,cum_regret,variation_so_far.
void write_trace_csv(std::ostream& out, const RegretTrace& trace);

}  // namespace onlinecut
