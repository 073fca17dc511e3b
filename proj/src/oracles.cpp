#include "onlinecut/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "onlinecut/errors.hpp"

namespace onlinecut {
namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (cap > kEnumerationCap) cap = kEnumerationCap;
  if (n > cap) {
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) +
                        " exceeds enumeration cap " + std::to_string(cap));
  }
}

double tie_slack(const Graph& g) {
  return g.integral_weights() ? 0.0 : 1e-9 * std::max(1.0, g.total_weight());
}

// Visits every bipartition with vertex 0 in X and Y nonempty, passing the
// X-side mask and the incrementally maintained cut weight. Gray-code order:
// each step moves one vertex across.
template <typename Visit>
void for_each_bipartition(const Graph& g, Visit&& visit) {
  const std::size_t n = g.vertex_count();
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::uint64_t x_mask = full;
  double value = 0.0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<VertexId>(std::countr_zero(i) + 1);
    const bool was_x = (x_mask >> v) & 1U;
    for (const Neighbor& nb : g.neighbors(v)) {
      const bool nb_x = (x_mask >> nb.vertex) & 1U;
      value += (nb_x == was_x) ? nb.w : -nb.w;
    }
    x_mask ^= std::uint64_t{1} << v;
    visit(x_mask, value);
  }
}

template <typename Better>
CutResult brute_force_extreme(const Graph& g, std::size_t cap, Better better, const char* what) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  if (n == 1) return {CutValue::infinite(), CutAssignment::from_x_mask(1, 1)};
  check_cap(n, cap, what);
  const double slack = tie_slack(g);
  bool have = false;
  double best = 0.0;
  std::uint64_t best_mask = 0;
  for_each_bipartition(g, [&](std::uint64_t mask, double value) {
    // Within the tie band the smaller mask wins.
    if (!have || better(value, best, slack) ||
        (std::abs(value - best) <= slack && mask < best_mask)) {
      have = true;
      best = value;
      best_mask = mask;
    }
  });
  return {CutValue(cut_weight_mask(g, best_mask)), CutAssignment::from_x_mask(n, best_mask)};
}

}  // namespace

CutResult brute_force_mincut(const Graph& g, std::size_t cap) {
  return brute_force_extreme(
      g, cap, [](double a, double b, double s) { return a < b - s; }, "brute_force_mincut");
}

CutResult brute_force_maxcut(const Graph& g, std::size_t cap) {
  if (g.vertex_count() < 2) throw std::invalid_argument("maxcut needs at least 2 vertices");
  return brute_force_extreme(
      g, cap, [](double a, double b, double s) { return a > b + s; }, "brute_force_maxcut");
}

std::vector<std::uint64_t> all_minimum_cuts(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("all_minimum_cuts needs at least 2 vertices");
  check_cap(n, cap, "all_minimum_cuts");
  const double slack = tie_slack(g);
  double best = std::numeric_limits<double>::infinity();
  for_each_bipartition(g, [&](std::uint64_t, double value) { best = std::min(best, value); });
  std::vector<std::uint64_t> masks;
  for_each_bipartition(g, [&](std::uint64_t mask, double value) {
    if (value <= best + slack) masks.push_back(mask);
  });
  std::sort(masks.begin(), masks.end());
  return masks;
}

CutResult stoer_wagner_mincut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("stoer_wagner_mincut needs at least 2 vertices");
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    w[e.u][e.v] += e.w;
    w[e.v][e.u] += e.w;
  }
  std::vector<std::vector<VertexId>> groups(n);
  for (std::size_t v = 0; v < n; ++v) groups[v] = {static_cast<VertexId>(v)};
  std::vector<bool> merged(n, false);

  double best = std::numeric_limits<double>::infinity();
  std::vector<VertexId> best_group;
  std::vector<double> key(n);
  std::vector<bool> added(n);
  for (std::size_t phase = 0; phase + 1 < n; ++phase) {
    std::fill(key.begin(), key.end(), 0.0);
    std::fill(added.begin(), added.end(), false);
    std::size_t prev = n, cur = n;
    for (std::size_t it = 0; it < n - phase; ++it) {
      std::size_t sel = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (!merged[v] && !added[v] && (sel == n || key[v] > key[sel])) sel = v;
      }
      added[sel] = true;
      prev = cur;
      cur = sel;
      for (std::size_t v = 0; v < n; ++v) {
        if (!merged[v] && !added[v]) key[v] += w[sel][v];
      }
    }
    if (key[cur] < best) {
      best = key[cur];
      best_group = groups[cur];
    }
    groups[prev].insert(groups[prev].end(), groups[cur].begin(), groups[cur].end());
    for (std::size_t v = 0; v < n; ++v) {
      w[prev][v] += w[cur][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0.0;
    merged[cur] = true;
  }
  CutAssignment witness = CutAssignment::from_x_side(n, best_group).normalized_to(0);
  return {cut_weight(g, witness), std::move(witness)};
}

std::uint64_t restricted_optimum_class(const Graph& g, std::span<const VertexId> prefix) {
  if (prefix.empty() || prefix.size() > 64) {
    throw std::invalid_argument("prefix must hold between 1 and 64 vertices");
  }
  const std::uint64_t prefix_full =
      prefix.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << prefix.size()) - 1);
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask : all_minimum_cuts(g)) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < prefix.size(); ++j) {
      if ((mask >> prefix[j]) & 1U) r |= std::uint64_t{1} << j;
    }
    if (r & 1U) r = ~r & prefix_full;
    classes.insert(r);
  }
  if (classes.size() != 1) {
    throw ContractViolation("instance has " + std::to_string(classes.size()) +
                            " distinct optimal restrictions to the prefix");
  }
  return *classes.begin();
}

std::size_t count_distinct_restricted_optima(std::span<const Graph> instances,
                                             std::span<const VertexId> prefix) {
  std::set<std::uint64_t> classes;
  for (const Graph& g : instances) classes.insert(restricted_optimum_class(g, prefix));
  return classes.size();
}

SetFunction::SetFunction(std::size_t ground_size, Evaluator f)
    : size_(ground_size), f_(std::move(f)) {
  if (size_ > kEnumerationCap) {
    throw CapacityError("set functions are capped at " + std::to_string(kEnumerationCap) +
                        " ground elements");
  }
  if (!f_) throw std::invalid_argument("set function needs an evaluator");
}

SetFunction SetFunction::from_table(std::vector<double> values) {
  if (values.empty() || !std::has_single_bit(values.size())) {
    throw std::invalid_argument("table size must be a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(values.size()));
  return SetFunction(n, [table = std::move(values)](std::uint32_t m) { return table.at(m); });
}

SetFunction SetFunction::cut_function(const Graph& g) {
  return SetFunction(g.vertex_count(), [g](std::uint32_t m) { return cut_weight_mask(g, m); });
}

SetFunction SetFunction::coverage(std::vector<std::vector<std::size_t>> sets,
                                  std::vector<double> item_weights,
                                  std::vector<double> element_costs) {
  const std::size_t n = sets.size();
  if (element_costs.empty()) element_costs.assign(n, 0.0);
  if (element_costs.size() != n) throw std::invalid_argument("one cost per element expected");
  for (const auto& s : sets) {
    for (std::size_t item : s) {
      if (item >= item_weights.size()) throw std::invalid_argument("coverage item out of range");
    }
  }
  return SetFunction(n, [sets = std::move(sets), items = std::move(item_weights),
                         costs = std::move(element_costs)](std::uint32_t m) {
    std::vector<bool> covered(items.size(), false);
    double value = 0.0;
    for (std::size_t e = 0; e < sets.size(); ++e) {
      if (!((m >> e) & 1U)) continue;
      value -= costs[e];
      for (std::size_t item : sets[e]) covered[item] = true;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (covered[i]) value += items[i];
    }
    return value;
  });
}

SetOptimum brute_force_set_optimum(const SetFunction& f, Sense sense, std::size_t cap) {
  if (f.ground_size() > std::min(cap, kEnumerationCap)) {
    throw CapacityError("set function ground set exceeds the enumeration cap");
  }
  const std::uint64_t count = std::uint64_t{1} << f.ground_size();
  auto better = [sense](double a, double b) { return sense == Sense::Maximize ? a > b : a < b; };
  SetOptimum out;
  out.value = f(0);
  int best_pop = 0;
  for (std::uint64_t m = 1; m < count; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const double v = f(mask);
    const int pop = std::popcount(mask);
    if (better(v, out.value)) {
      out = {v, mask, mask};
      best_pop = pop;
    } else if (v == out.value && pop > best_pop) {
      out.maximal_witness = mask;
      best_pop = pop;
    }
  }
  return out;
}

std::optional<SubmodularViolation> find_submodular_violation(const SetFunction& f, double tol) {
  const std::size_t n = f.ground_size();
  if (n > kSubmodularCheckCap) {
    throw CapacityError("submodularity check is capped at " +
                        std::to_string(kSubmodularCheckCap) + " elements");
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<double> table(count);
  for (std::uint32_t m = 0; m < count; ++m) table[m] = f(m);
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      const double slack = table[a] + table[b] - table[a | b] - table[a & b];
      if (slack < -tol) return SubmodularViolation{a, b, slack};
    }
  }
  return std::nullopt;
}

bool is_submodular(const SetFunction& f, double tol) {
  return !find_submodular_violation(f, tol).has_value();
}

}  // namespace onlinecut
