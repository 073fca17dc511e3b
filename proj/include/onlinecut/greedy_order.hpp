#pragma once

// Arrival orders on which the greedy algorithms are optimal, built the way
// the existence proofs build them, plus exhaustive cross-checks.

#include <cstdint>
#include <string>
#include <vector>

#include "onlinecut/engine.hpp"
#include "onlinecut/graph.hpp"
#include "onlinecut/oracles.hpp"

namespace onlinecut {

inline constexpr std::size_t kPermutationSearchCap = 8;

struct OrderedCut {
  ArrivalOrder order;
  CutAssignment cut;  // order[0] on side X
  double value = 0.0;
};

/// Picks the minimum cut with |X| smallest (lexicographically least X
/// among those) and orders the vertices so that greedy_min reproduces it.
OrderedCut construct_mincut_order(const Graph& g);

/// Starts from a brute-force maximum cut and extends an order greedily,
/// swapping the unplaced remainder across when stuck, so that greedy_max
/// reproduces the final maximum cut.
OrderedCut construct_maxcut_order(const Graph& g);

/// Empty when (order, cut) meets the min-cut ordering conditions, otherwise
/// a description of the first failing condition.
std::string check_mincut_conditions(const Graph& g, const ArrivalOrder& order,
                                    const CutAssignment& cut);
std::string check_maxcut_conditions(const Graph& g, const ArrivalOrder& order,
                                    const CutAssignment& cut);

/// Graph on groups.size() vertices; group i becomes vertex i, weights add up
/// and edges inside a group disappear. Vertices not in any group are an
/// error.
Graph contract(const Graph& g, const std::vector<std::vector<VertexId>>& groups);

struct SubmodularOrder {
  std::vector<std::uint32_t> order;
  std::uint32_t maximizer = 0;  // inclusion-maximal maximizer, listed first
  double value = 0.0;
};

/// Rejects non-submodular f when |E| <= 12 (std::invalid_argument).
SubmodularOrder construct_submodular_order(const SetFunction& f);

enum class Objective { Minimize, Maximize };

struct PermutationSearch {
  double best = 0.0;
  ArrivalOrder witness;
  bool matches = false;
  std::size_t orders_evaluated = 0;
};

/// Evaluates `algorithm` on every order of g (n <= 8), lexicographically,
/// and compares the best value with `target`. With stop_on_match the scan
/// ends at the first order that attains the target.
PermutationSearch verify_min_over_orders(const Graph& g, const OnlineCutAlgorithm& algorithm,
                                         double target, Objective objective = Objective::Minimize,
                                         bool stop_on_match = false,
                                         std::size_t cap = kPermutationSearchCap);

}  // namespace onlinecut
