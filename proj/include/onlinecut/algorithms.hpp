#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "onlinecut/engine.hpp"
#include "onlinecut/oracles.hpp"

namespace onlinecut {

/// f_X and f_Y closer than this count as equal.
inline constexpr double kTieTolerance = 1e-9;

/// How greedy_min/greedy_max break f_X = f_Y ties.
enum class TieRule {
  PreviousVertex,  // v_i joins the side v_{i-1} took
  SideCount,       // Y while |X| = 1, X afterwards
};

/// v_1 to X, everything else to Y. Cut value = weighted degree of v_1.
AlgorithmPtr trivial_first_vertex();
/// v_1 to Y, everything else to X.
AlgorithmPtr sparse_alg();
/// v_1 to X, v_2 to Y, then the side with more weight to v_i.
AlgorithmPtr greedy_min(TieRule tie = TieRule::PreviousVertex);
/// v_1 to X, v_2 to Y, then the side with less weight to v_i.
AlgorithmPtr greedy_max(TieRule tie = TieRule::PreviousVertex);

/// trivial | sparse | greedy-min | greedy-max; throws std::invalid_argument.
AlgorithmPtr make_algorithm(const std::string& key);
std::vector<std::string> algorithm_keys();

struct GreedyStep {
  std::uint32_t element = 0;
  double marginal = 0.0;
  bool accepted = false;
};

struct GreedySetResult {
  std::uint32_t subset = 0;  // bitmask over the ground set
  double value = 0.0;
  std::vector<GreedyStep> steps;
};

/// Scans `order` once from the empty set, accepting e iff f(X + e) >= f(X).
GreedySetResult greedy_submodular_max(const SetFunction& f, std::span<const std::uint32_t> order);
/// Mirror image: accepts e iff f(X + e) <= f(X).
GreedySetResult greedy_submodular_min_demo(const SetFunction& f,
                                           std::span<const std::uint32_t> order);

}  // namespace onlinecut
