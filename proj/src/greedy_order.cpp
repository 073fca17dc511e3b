#include "onlinecut/greedy_order.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "onlinecut/errors.hpp"

namespace onlinecut {
namespace {

double slack(const Graph& g) { return g.tolerance() * std::max(1.0, g.total_weight()); }

double weight_to(const Graph& g, VertexId v, std::uint64_t mask) {
  double total = 0.0;
  for (const Neighbor& nb : g.neighbors(v)) {
    if ((mask >> nb.vertex) & 1U) total += nb.w;
  }
  return total;
}

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

std::vector<VertexId> members(std::uint64_t mask) {
  std::vector<VertexId> out;
  for (VertexId v = 0; mask >> v; ++v) {
    if ((mask >> v) & 1U) out.push_back(v);
  }
  return out;
}

// Order for a cut with |X| = 1: v1 alone on one side, v2 first on the other, then
// repeatedly the smallest y with |y, Y'| >= |y, v1|.
std::vector<VertexId> grow_order(const Graph& h, VertexId v1, VertexId v2) {
  const std::size_t n = h.vertex_count();
  const double tol = slack(h);
  std::vector<VertexId> order = {v1, v2};
  std::uint64_t placed = (std::uint64_t{1} << v1) | (std::uint64_t{1} << v2);
  std::uint64_t y_prime = std::uint64_t{1} << v2;
  while (order.size() < n) {
    VertexId next = static_cast<VertexId>(n);
    for (VertexId y = 0; y < n; ++y) {
      if ((placed >> y) & 1U) continue;
      if (weight_to(h, y, y_prime) >= h.weight(y, v1) - tol) {
        next = y;
        break;
      }
    }
    if (next == n) {
      throw ContractViolation("no vertex y with |y,Y'| >= |y,v1| after " +
                              std::to_string(order.size()) + " placements");
    }
    order.push_back(next);
    placed |= std::uint64_t{1} << next;
    y_prime |= std::uint64_t{1} << next;
  }
  return order;
}

double match_tolerance(double target) { return 1e-9 * std::max(1.0, std::abs(target)); }

}  // namespace

Graph contract(const Graph& g, const std::vector<std::vector<VertexId>>& groups) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> group_of(n, groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (VertexId v : groups[i]) {
      if (v >= n || group_of[v] != groups.size()) {
        throw std::invalid_argument("contraction groups must partition the vertices");
      }
      group_of[v] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (group_of[v] == groups.size()) throw std::invalid_argument("vertex missing from contraction");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (group_of[e.u] != group_of[e.v]) {
      edges.push_back({static_cast<VertexId>(group_of[e.u]), static_cast<VertexId>(group_of[e.v]), e.w});
    }
  }
  return Graph(groups.size(), std::move(edges));
}

OrderedCut construct_mincut_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("construct_mincut_order needs at least 2 vertices");
  const std::uint64_t all = full_mask(n);

  // Smallest |X|, then lexicographically least X, over both orientations.
  std::uint64_t x_mask = 0;
  std::vector<VertexId> best;
  for (std::uint64_t m : all_minimum_cuts(g)) {
    for (std::uint64_t cand : {m, all & ~m}) {
      std::vector<VertexId> xs = members(cand);
      if (best.empty() || xs.size() < best.size() || (xs.size() == best.size() && xs < best)) {
        best = std::move(xs);
        x_mask = cand;
      }
    }
  }
  const std::uint64_t y_mask = all & ~x_mask;
  const std::vector<VertexId> ys = members(y_mask);

  OrderedCut out;
  out.cut = CutAssignment::from_x_mask(n, x_mask);
  out.value = cut_weight_mask(g, x_mask);
  if (best.size() == 1) {
    out.order = ArrivalOrder(grow_order(g, best[0], ys[0]));
    return out;
  }

  // Find x' with more weight to x than to all of Y.
  const double tol = slack(g);
  VertexId x = 0, x2 = 0;
  bool found = false;
  for (VertexId a : best) {
    for (VertexId b : best) {
      if (a != b && g.weight(a, b) > weight_to(g, a, y_mask) + tol) {
        x2 = a;
        x = b;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw ContractViolation("no pair x, x' with |x',x| > |x',Y| in the minimum cut");

  // Y order: contract X into x* (vertex 0); Y keeps ascending order as 1..|Y|.
  std::vector<std::vector<VertexId>> groups = {best};
  for (VertexId y : ys) groups.push_back({y});
  const std::vector<VertexId> y_order = grow_order(contract(g, groups), 0, 1);

  // X' order: y* = 0, x* = {x, x'} = 1, then X' ascending.
  std::vector<VertexId> rest;
  for (VertexId v : best) {
    if (v != x && v != x2) rest.push_back(v);
  }
  groups = {ys, {x, x2}};
  for (VertexId v : rest) groups.push_back({v});
  const std::vector<VertexId> x_order = grow_order(contract(g, groups), 0, 1);

  std::vector<VertexId> order = {x};
  for (std::size_t i = 1; i < y_order.size(); ++i) order.push_back(ys[y_order[i] - 1]);
  order.push_back(x2);
  for (std::size_t i = 2; i < x_order.size(); ++i) order.push_back(rest[x_order[i] - 2]);
  out.order = ArrivalOrder(std::move(order));
  return out;
}

OrderedCut construct_maxcut_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("construct_maxcut_order needs at least 2 vertices");
  const CutResult mc = brute_force_maxcut(g);
  const double target = mc.value.value();
  const double tol = slack(g);
  std::vector<Side> side(mc.witness.sides().begin(), mc.witness.sides().end());

  std::vector<VertexId> order;
  std::uint64_t placed = 0;
  auto place = [&](VertexId v) {
    order.push_back(v);
    placed |= std::uint64_t{1} << v;
  };
  for (Side s : {Side::X, Side::Y}) {
    for (VertexId v = 0; v < n; ++v) {
      if (side[v] == s) {
        place(v);
        break;
      }
    }
  }

  bool just_swapped = false;
  while (order.size() < n) {
    const Side s = side[order.back()];
    std::uint64_t same = 0, other = 0;
    for (VertexId v : order) (side[v] == s ? same : other) |= std::uint64_t{1} << v;
    VertexId next = static_cast<VertexId>(n);
    for (VertexId u = 0; u < n && next == n; ++u) {
      if ((placed >> u) & 1U) continue;
      const double to_same = weight_to(g, u, side[u] == s ? same : other);
      const double to_other = weight_to(g, u, side[u] == s ? other : same);
      // A vertex joining v_k's side may tie; one joining the other side may not.
      if (side[u] == s ? to_same <= to_other + tol : to_same < to_other - tol) next = u;
    }
    if (next != n) {
      place(next);
      just_swapped = false;
      continue;
    }
    if (just_swapped) throw ContractViolation("no progress after moving the unplaced vertices");
    std::uint64_t remainder = 0;
    for (VertexId u = 0; u < n; ++u) {
      if ((placed >> u) & 1U) continue;
      if (side[u] == s) throw ContractViolation("stuck with unplaced vertices on the side of v_k");
      remainder |= std::uint64_t{1} << u;
    }
    double to_other = 0.0, to_same = 0.0;
    for (VertexId u : members(remainder)) {
      to_other += weight_to(g, u, other);
      to_same += weight_to(g, u, same);
    }
    if (std::abs(to_other - to_same) > tol) {
      throw ContractViolation("moving the unplaced vertices would change the cut value");
    }
    for (VertexId u : members(remainder)) side[u] = s;
    just_swapped = true;
  }

  std::uint64_t x_mask = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (side[v] == Side::X) x_mask |= std::uint64_t{1} << v;
  }
  OrderedCut out;
  out.order = ArrivalOrder(std::move(order));
  out.cut = CutAssignment::from_x_mask(n, x_mask);
  out.value = cut_weight_mask(g, x_mask);
  if (std::abs(out.value - target) > tol) {
    throw ContractViolation("constructed cut is no longer maximum");
  }
  return out;
}

namespace {

struct Replay {
  VertexId v;
  Side side;
  double to_x;
  double to_y;
};

// Per-arrival weights into the X and Y parts of the cut already revealed.
std::vector<Replay> replay(const Graph& g, const ArrivalOrder& order, const CutAssignment& cut) {
  std::vector<Replay> out;
  std::uint64_t xs = 0, ys = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    out.push_back({v, cut.side(v), weight_to(g, v, xs), weight_to(g, v, ys)});
    (cut.side(v) == Side::X ? xs : ys) |= std::uint64_t{1} << v;
  }
  return out;
}

std::string check_common(const Graph& g, const ArrivalOrder& order, const CutAssignment& cut) {
  if (order.size() != g.vertex_count() || cut.size() != g.vertex_count()) return "size mismatch";
  if (!cut.is_valid_cut()) return "not a valid cut";
  if (cut.side(order[0]) != Side::X || cut.side(order[1]) != Side::Y) {
    return "(i) fails: v1 must be in X and v2 in Y";
  }
  return {};
}

}  // namespace

std::string check_mincut_conditions(const Graph& g, const ArrivalOrder& order,
                                    const CutAssignment& cut) {
  if (std::string err = check_common(g, order, cut); !err.empty()) return err;
  const double tol = slack(g);
  const std::vector<Replay> steps = replay(g, order, cut);
  bool first_x_seen = false;
  for (std::size_t i = 2; i < steps.size(); ++i) {
    const Replay& r = steps[i];
    const double own = r.side == Side::X ? r.to_x : r.to_y;
    const double cross = r.side == Side::X ? r.to_y : r.to_x;
    if (own < cross - tol) return "(ii) fails at position " + std::to_string(i + 1);
    if (r.side == Side::X && !first_x_seen) {
      first_x_seen = true;
      if (i != cut.count(Side::Y) + 1) {
        return "(iii) fails: first later X vertex at position " + std::to_string(i + 1);
      }
      if (!(r.to_x > r.to_y + tol)) {
        return "(iii) fails: no strict preference at position " + std::to_string(i + 1);
      }
    }
  }
  return {};
}

std::string check_maxcut_conditions(const Graph& g, const ArrivalOrder& order,
                                    const CutAssignment& cut) {
  if (std::string err = check_common(g, order, cut); !err.empty()) return err;
  const double tol = slack(g);
  const std::vector<Replay> steps = replay(g, order, cut);
  for (std::size_t i = 2; i < steps.size(); ++i) {
    const Replay& r = steps[i];
    const double own = r.side == Side::X ? r.to_x : r.to_y;
    const double cross = r.side == Side::X ? r.to_y : r.to_x;
    if (own > cross + tol) return "(ii) fails at position " + std::to_string(i + 1);
    if (std::abs(own - cross) <= tol && steps[i - 1].side != r.side) {
      return "(iii) fails at position " + std::to_string(i + 1);
    }
  }
  return {};
}

SubmodularOrder construct_submodular_order(const SetFunction& f) {
  if (f.ground_size() <= kSubmodularCheckCap && !is_submodular(f)) {
    throw std::invalid_argument("set function is not submodular");
  }
  const SetOptimum opt = brute_force_set_optimum(f, Sense::Maximize);
  const double tol = 1e-9 * std::max(1.0, std::abs(opt.value));
  std::uint32_t x = opt.maximal_witness;
  // Upward closure: keep adding elements while the value stays maximal.
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t e = 0; e < f.ground_size(); ++e) {
      if (!((x >> e) & 1U) && f(x | (1U << e)) >= opt.value - tol) {
        x |= 1U << e;
        grew = true;
      }
    }
  }
  SubmodularOrder out;
  out.maximizer = x;
  out.value = f(x);
  for (std::uint32_t e = 0; e < f.ground_size(); ++e) {
    if ((x >> e) & 1U) out.order.push_back(e);
  }
  for (std::uint32_t e = 0; e < f.ground_size(); ++e) {
    if (!((x >> e) & 1U)) out.order.push_back(e);
  }
  return out;
}

PermutationSearch verify_min_over_orders(const Graph& g, const OnlineCutAlgorithm& algorithm,
                                         double target, Objective objective, bool stop_on_match,
                                         std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  if (n > std::min(cap, kPermutationSearchCap)) {
    throw CapacityError("permutation search over n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min(cap, kPermutationSearchCap)));
  }
  const double tol = match_tolerance(target);
  PermutationSearch out;
  out.best = objective == Objective::Minimize ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity();
  for_each_order(n, [&](const ArrivalOrder& order) {
    const double v = run_value(g, order, algorithm);
    ++out.orders_evaluated;
    if (objective == Objective::Minimize ? v < out.best : v > out.best) {
      out.best = v;
      out.witness = order;
    }
    return !(stop_on_match && std::abs(v - target) <= tol);
  });
  out.matches = std::abs(out.best - target) <= tol;
  return out;
}

}  // namespace onlinecut
