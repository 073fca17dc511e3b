#pragma once

// Vertex-arrival execution: the online algorithm contract, single runs, and
// the worst-case / best-case / random-order functionals over arrival orders.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onlinecut/advice_tape.hpp"
#include "onlinecut/graph.hpp"

namespace onlinecut {

inline constexpr std::size_t kOrderEnumerationCap = 9;

/// Edge from the arriving vertex back to an earlier arrival.
struct BackEdge {
  std::size_t arrival = 0;
  double w = 0.0;
};

/// What an online algorithm may look at: the revealed prefix, addressed by
/// arrival index, and its own earlier placements.
class PrefixView {
 public:
  PrefixView(const std::vector<std::vector<BackEdge>>& edges, const std::vector<Side>& sides)
      : edges_(&edges), sides_(&sides) {}

  /// Number of revealed vertices, including the one being placed.
  std::size_t size() const { return edges_->size(); }
  std::span<const BackEdge> back_edges(std::size_t arrival) const { return (*edges_).at(arrival); }
  /// Side chosen for an earlier arrival; Unassigned for the current one.
  Side side(std::size_t arrival) const {
    return arrival < sides_->size() ? (*sides_)[arrival] : Side::Unassigned;
  }

 private:
  const std::vector<std::vector<BackEdge>>* edges_;
  const std::vector<Side>* sides_;
};

struct Arrival {
  std::size_t index;  // 0 for v_1
  std::span<const BackEdge> edges;
  const PrefixView& prefix;

  /// Weight of edges from the arriving vertex into side s so far.
  double weight_to(Side s) const;
};

/// Per-run mutable state of an online algorithm.
class CutPolicy {
 public:
  virtual ~CutPolicy() = default;
  /// Irrevocable placement of the arriving vertex. `advice` is null for
  /// algorithms that do not use advice.
  virtual Side place(const Arrival& arrival, AdviceReader* advice) = 0;
};

class OnlineCutAlgorithm {
 public:
  virtual ~OnlineCutAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual bool uses_advice() const { return false; }
  /// Fresh state for one run.
  virtual std::unique_ptr<CutPolicy> start() const = 0;
};

using AlgorithmPtr = std::shared_ptr<const OnlineCutAlgorithm>;

struct StepRecord {
  std::size_t index = 0;
  VertexId vertex = 0;
  Side side = Side::Unassigned;  // as placed by the algorithm
  double f_x = 0.0;              // weight into X before placement
  double f_y = 0.0;              // weight into Y before placement
  std::size_t bits_read = 0;
};

/// Incremental run driven by the caller one arrival at a time. Adaptive
/// adversaries use this directly; run() is a thin loop over it.
class OnlineSession {
 public:
  OnlineSession(const OnlineCutAlgorithm& algorithm, std::optional<AdviceTape> tape = std::nullopt);

  /// Reveals the next vertex with its edges into the prefix and returns the
  /// algorithm's decision. `vertex` is only recorded in the step log.
  Side reveal(std::vector<BackEdge> edges, VertexId vertex);

  std::size_t revealed() const { return sides_.size(); }
  std::span<const Side> sides() const { return sides_; }
  std::span<const StepRecord> steps() const { return steps_; }
  std::size_t advice_consumed() const { return reader_ ? reader_->consumed() : 0; }
  const std::string& algorithm_name() const { return name_; }

 private:
  std::string name_;
  std::unique_ptr<CutPolicy> policy_;
  std::optional<AdviceTape> tape_;
  std::optional<AdviceReader> reader_;
  std::vector<std::vector<BackEdge>> edges_;
  std::vector<Side> sides_;
  std::vector<StepRecord> steps_;
};

struct RunRecord {
  CutAssignment assignment;  // complete; v_1 on side X
  CutValue value;
  std::size_t advice_bits = 0;
  std::vector<StepRecord> steps;
  /// True when the algorithm put v_1 in Y and the labels were swapped.
  bool labels_swapped = false;
};

/// Runs `algorithm` on g in the given arrival order. A tape must be given
/// exactly when the algorithm uses advice. Throws ContractViolation if the
/// algorithm leaves a side empty on a graph with two or more vertices.
RunRecord run(const Graph& g, const ArrivalOrder& order, const OnlineCutAlgorithm& algorithm,
              std::optional<AdviceTape> tape = std::nullopt);

/// Turns a finished session over g/order into a RunRecord.
RunRecord finish_run(const Graph& g, const ArrivalOrder& order, const OnlineSession& session);

/// Edges of order[index] back into order[0..index), ascending by arrival.
std::vector<BackEdge> back_edges_of(const Graph& g, const ArrivalOrder& order,
                                    std::span<const std::size_t> positions, std::size_t index);

/// Produces the advice tape for an instance and order.
using TapeSource = std::function<AdviceTape(const Graph&, const ArrivalOrder&)>;

/// Calls visit(order) for every permutation of [0, n) in lexicographic
/// order until visit returns false.
void for_each_order(std::size_t n, const std::function<bool(const ArrivalOrder&)>& visit);

struct OrderSearch {
  enum class Mode { Exhaustive, Sampled };

  Mode mode = Mode::Exhaustive;
  std::size_t cap = kOrderEnumerationCap;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static OrderSearch exhaustive(std::size_t cap = kOrderEnumerationCap) {
    return {Mode::Exhaustive, cap, 0, 0};
  }
  static OrderSearch sampled(std::size_t samples, std::uint64_t seed) {
    return {Mode::Sampled, kOrderEnumerationCap, samples, seed};
  }
};

const char* to_string(OrderSearch::Mode mode);

struct OrderExtreme {
  double value = 0.0;
  ArrivalOrder witness;
  OrderSearch::Mode mode = OrderSearch::Mode::Exhaustive;
  std::size_t runs = 0;
  /// Sampled worst cases are lower bounds, sampled best cases upper bounds.
  bool exact() const { return mode == OrderSearch::Mode::Exhaustive; }
};

OrderExtreme worst_case_value(const Graph& g, const OnlineCutAlgorithm& algorithm,
                              const OrderSearch& search = OrderSearch::exhaustive(),
                              const TapeSource& tapes = {});
OrderExtreme best_case_value(const Graph& g, const OnlineCutAlgorithm& algorithm,
                             const OrderSearch& search = OrderSearch::exhaustive(),
                             const TapeSource& tapes = {});

struct ExpectationMode {
  bool exact = true;
  std::size_t cap = kOrderEnumerationCap;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;

  static ExpectationMode exhaustive(std::size_t cap = kOrderEnumerationCap) {
    return {true, cap, 0, 0, 1};
  }
  static ExpectationMode monte_carlo(std::size_t samples, std::uint64_t seed,
                                     std::size_t threads = 1) {
    return {false, kOrderEnumerationCap, samples, seed, threads};
  }
};

struct Expectation {
  double mean = 0.0;
  double std_error = 0.0;  // 0 in exact mode
  bool exact = true;
  std::size_t runs = 0;
};

/// Mean of A(G, pi) over uniformly random arrival orders pi.
Expectation expected_value_random_order(const Graph& g, const OnlineCutAlgorithm& algorithm,
                                        const ExpectationMode& mode,
                                        const TapeSource& tapes = {});

/// Value of a run as a double (infinity for single-vertex graphs).
double run_value(const Graph& g, const ArrivalOrder& order, const OnlineCutAlgorithm& algorithm,
                 const TapeSource& tapes = {});

}  // namespace onlinecut
