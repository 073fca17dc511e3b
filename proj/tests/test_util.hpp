#pragma once

// Reference implementations for the tests. They share nothing with the
// library beyond the Graph container, and use their own RNG.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "onlinecut/graph.hpp"

namespace testutil {

using onlinecut::Edge;
using onlinecut::Graph;
using onlinecut::VertexId;

inline double naive_cut(const Graph& g, std::uint64_t mask) {
  double s = 0;
  for (const Edge& e : g.edges())
    if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) s += e.w;
  return s;
}

// Every proper nonempty subset, no symmetry shortcut.
inline double naive_mincut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) best = std::min(best, naive_cut(g, m));
  return best;
}

inline double naive_maxcut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  double best = -1;
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) best = std::max(best, naive_cut(g, m));
  return best;
}

inline double naive_degree(const Graph& g, VertexId v) {
  double d = 0;
  for (const Edge& e : g.edges())
    if (e.u == v || e.v == v) d += e.w;
  return d;
}

inline double naive_min_degree(const Graph& g) {
  double d = std::numeric_limits<double>::infinity();
  for (VertexId v = 0; v < g.vertex_count(); ++v) d = std::min(d, naive_degree(g, v));
  return d;
}

inline bool naive_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : g.edges()) {
      if (e.w <= 0) continue;
      const auto m = std::min(comp[e.u], comp[e.v]);
      if (comp[e.u] != m || comp[e.v] != m) {
        comp[e.u] = comp[e.v] = m;
        changed = true;
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

// Pairs kept with probability prob; weight 1..max_w, or a dyadic real in
// (0, 4] when max_w == 0.
inline Graph random_graph(std::size_t n, double prob, int max_w, std::mt19937& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (u01(rng) >= prob) continue;
      const double w = max_w > 0 ? static_cast<double>(1 + rng() % max_w)
                                 : static_cast<double>(1 + rng() % 16) / 4.0;
      edges.push_back({u, v, w});
    }
  return Graph(n, std::move(edges));
}

struct GreedyOutcome {
  std::vector<int> side;  // 0 = X, 1 = Y, indexed by vertex
  double value = 0;
};

// Rule (R) straight from its description: v1 -> X, v2 -> Y, then compare
// crossing counts, ties follow the previous vertex.
inline GreedyOutcome simulate_greedy(const Graph& g, const std::vector<VertexId>& order, bool maximize) {
  GreedyOutcome out;
  out.side.assign(g.vertex_count(), -1);
  int prev = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    int s;
    if (i == 0) {
      s = 0;
    } else if (i == 1) {
      s = 1;
    } else {
      double fx = 0, fy = 0;
      for (const Edge& e : g.edges()) {
        VertexId o;
        if (e.u == v) o = e.v;
        else if (e.v == v) o = e.u;
        else continue;
        if (out.side[o] == 0) fx += e.w;
        if (out.side[o] == 1) fy += e.w;
      }
      if (fx == fy) s = prev;
      else if (maximize) s = fx < fy ? 0 : 1;
      else s = fx > fy ? 0 : 1;
    }
    out.side[v] = s;
    prev = s;
  }
  std::uint64_t mask = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (out.side[v] == 0) mask |= std::uint64_t{1} << v;
  out.value = naive_cut(g, mask);
  return out;
}

// Min-cut conditions, checked directly: v1 in X, the next |Y| arrivals in
// Y, and from v3 on every vertex at least as attached to its own side.
inline bool replay_min(const Graph& g, const onlinecut::ArrivalOrder& order, std::uint64_t x_mask) {
  const std::size_t n = g.vertex_count();
  const auto ys = static_cast<std::size_t>(n - std::popcount(x_mask));
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_x = (x_mask >> order[i]) & 1;
    if (i == 0 || i > ys) {
      if (!in_x) return false;
    } else if (in_x) {
      return false;
    }
    if (i < 2) continue;
    double fx = 0, fy = 0;
    for (std::size_t j = 0; j < i; ++j) ((x_mask >> order[j]) & 1 ? fx : fy) += g.weight(order[i], order[j]);
    if ((in_x ? fx : fy) < (in_x ? fy : fx)) return false;
  }
  return true;
}

// Max-cut conditions: v1 in X, v2 in Y, then every vertex no more attached
// to its own side than to the other.
inline bool replay_max(const Graph& g, const onlinecut::ArrivalOrder& order, std::uint64_t x_mask) {
  const std::size_t n = g.vertex_count();
  if (!((x_mask >> order[0]) & 1) || ((x_mask >> order[1]) & 1)) return false;
  for (std::size_t i = 2; i < n; ++i) {
    const bool in_x = (x_mask >> order[i]) & 1;
    double fx = 0, fy = 0;
    for (std::size_t j = 0; j < i; ++j) ((x_mask >> order[j]) & 1 ? fx : fy) += g.weight(order[i], order[j]);
    if ((in_x ? fx : fy) > (in_x ? fy : fx)) return false;
  }
  return true;
}

}  // namespace testutil
