#pragma once

// Exact offline optima used as ground truth.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "onlinecut/graph.hpp"

namespace onlinecut {

inline constexpr std::size_t kEnumerationCap = 24;
inline constexpr std::size_t kSubmodularCheckCap = 12;

struct CutResult {
  CutValue value;
  CutAssignment witness;  // vertex 0 on side X
};

/// Minimum over all bipartitions with both sides nonempty. Vertex 0 is kept
/// in X; ties go to the numerically smallest X-side bitmask.
CutResult brute_force_mincut(const Graph& g, std::size_t cap = kEnumerationCap);

/// Maximum cut by enumeration, same tie rule as brute_force_mincut.
CutResult brute_force_maxcut(const Graph& g, std::size_t cap = kEnumerationCap);

/// Every minimum-cut bipartition, as X-side bitmasks containing vertex 0,
/// in ascending mask order.
std::vector<std::uint64_t> all_minimum_cuts(const Graph& g, std::size_t cap = kEnumerationCap);

/// Stoer-Wagner global minimum cut. Deterministic: ties in the maximum
/// adjacency search go to the lowest index. Requires n >= 2.
CutResult stoer_wagner_mincut(const Graph& g);

/// Restriction of the graph's minimum cuts to `prefix`, as a bitmask over
/// prefix positions normalized so that bit 0 is clear (mod side swap).
/// Throws ContractViolation when two minimum cuts restrict differently.
std::uint64_t restricted_optimum_class(const Graph& g, std::span<const VertexId> prefix);

/// Number of pairwise distinct restricted optima (mod swap) over instances
/// that share the prefix vertex set.
std::size_t count_distinct_restricted_optima(std::span<const Graph> instances,
                                             std::span<const VertexId> prefix);

/// f : 2^E -> R with subsets encoded as bitmasks over |E| <= 24 elements.
class SetFunction {
 public:
  using Evaluator = std::function<double(std::uint32_t)>;

  SetFunction(std::size_t ground_size, Evaluator f);

  /// Dense table of 2^|E| values indexed by mask.
  static SetFunction from_table(std::vector<double> values);
  /// f(S) = weight of edges between S and V \ S.
  static SetFunction cut_function(const Graph& g);
  /// f(S) = total weight of the universe items covered by the sets in S,
  /// minus the sum of the element costs in S.
  static SetFunction coverage(std::vector<std::vector<std::size_t>> sets,
                              std::vector<double> item_weights,
                              std::vector<double> element_costs = {});

  std::size_t ground_size() const { return size_; }
  double operator()(std::uint32_t mask) const { return f_(mask); }
  std::uint32_t full_mask() const {
    return size_ == 32 ? ~0U : ((std::uint32_t{1} << size_) - 1U);
  }

 private:
  std::size_t size_;
  Evaluator f_;
};

enum class Sense { Minimize, Maximize };

struct SetOptimum {
  double value = 0.0;
  std::uint32_t witness = 0;          // smallest optimal mask
  std::uint32_t maximal_witness = 0;  // an inclusion-maximal optimal mask
};

SetOptimum brute_force_set_optimum(const SetFunction& f, Sense sense,
                                   std::size_t cap = kEnumerationCap);

struct SubmodularViolation {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  double slack = 0.0;  // f(a)+f(b)-f(a|b)-f(a&b) < 0
};

/// Checks f(A)+f(B) >= f(A|B)+f(A&B) over all pairs; |E| <= 12.
std::optional<SubmodularViolation> find_submodular_violation(const SetFunction& f,
                                                             double tol = 1e-9);
bool is_submodular(const SetFunction& f, double tol = 1e-9);

}  // namespace onlinecut
