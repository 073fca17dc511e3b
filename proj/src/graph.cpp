#include "onlinecut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace onlinecut {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : adjacency_(n) {
  for (Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loops are not allowed");
    }
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw std::invalid_argument("edge weights must be finite and nonnegative");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().w += e.w;
    } else {
      edges_.push_back(e);
    }
  }
  build();
}

Graph Graph::unweighted(std::size_t n,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v, 1.0});
  return Graph(n, std::move(list));
}

Graph Graph::unweighted(std::size_t n,
                        std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return unweighted(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

void Graph::build() {
  for (auto& adj : adjacency_) adj.clear();
  total_weight_ = 0.0;
  integral_ = true;
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.w});
    adjacency_[e.v].push_back({e.u, e.w});
    total_weight_ += e.w;
    if (e.w != std::floor(e.w)) integral_ = false;
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

double Graph::weight(VertexId u, VertexId v) const {
  const auto& adj = adjacency_.at(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& nb, VertexId x) { return nb.vertex < x; });
  return (it != adj.end() && it->vertex == v) ? it->w : 0.0;
}

Graph Graph::with_weights(std::span<const double> weights) const {
  if (weights.size() != edges_.size()) {
    throw std::invalid_argument("weight vector length does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = weights[i];
  return Graph(vertex_count(), std::move(edges));
}

const char* to_string(Side s) {
  switch (s) {
    case Side::X:
      return "X";
    case Side::Y:
      return "Y";
    default:
      return "-";
  }
}

CutAssignment CutAssignment::from_x_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("bitmask assignments need n <= 64");
  std::vector<Side> sides(n);
  for (std::size_t v = 0; v < n; ++v) sides[v] = ((mask >> v) & 1U) ? Side::X : Side::Y;
  return CutAssignment(std::move(sides));
}

CutAssignment CutAssignment::from_x_side(std::size_t n, std::span<const VertexId> x_side) {
  std::vector<Side> sides(n, Side::Y);
  for (VertexId v : x_side) sides.at(v) = Side::X;
  return CutAssignment(std::move(sides));
}

bool CutAssignment::is_complete() const {
  return std::none_of(sides_.begin(), sides_.end(),
                      [](Side s) { return s == Side::Unassigned; });
}

bool CutAssignment::is_valid_cut() const {
  return is_complete() && count(Side::X) > 0 && count(Side::Y) > 0;
}

std::vector<VertexId> CutAssignment::members(Side s) const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < sides_.size(); ++v) {
    if (sides_[v] == s) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::size_t CutAssignment::count(Side s) const {
  return static_cast<std::size_t>(std::count(sides_.begin(), sides_.end(), s));
}

CutAssignment CutAssignment::swapped() const {
  std::vector<Side> sides(sides_.size());
  std::transform(sides_.begin(), sides_.end(), sides.begin(), opposite);
  return CutAssignment(std::move(sides));
}

CutAssignment CutAssignment::normalized_to(VertexId v) const {
  return side(v) == Side::Y ? swapped() : *this;
}

std::uint64_t CutAssignment::x_mask() const {
  if (sides_.size() > 64) throw std::invalid_argument("bitmask assignments need n <= 64");
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < sides_.size(); ++v) {
    if (sides_[v] == Side::X) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

ArrivalOrder::ArrivalOrder(std::vector<VertexId> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (VertexId v : order_) {
    if (v >= order_.size() || seen[v]) {
      throw std::invalid_argument("arrival order is not a permutation");
    }
    seen[v] = true;
  }
}

ArrivalOrder ArrivalOrder::identity(std::size_t n) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  return ArrivalOrder(std::move(order));
}

std::vector<std::size_t> ArrivalOrder::positions() const {
  std::vector<std::size_t> pos(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
  return pos;
}

std::string ArrivalOrder::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order_[i]);
  }
  return out;
}

ArrivalOrder ArrivalOrder::parse(const std::string& text) {
  std::vector<VertexId> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    order.push_back(static_cast<VertexId>(std::stoul(item)));
  }
  return ArrivalOrder(std::move(order));
}

double CutValue::value() const {
  if (infinite_) throw std::domain_error("cut value is infinite");
  return value_;
}

std::string to_string(const CutValue& c) {
  if (c.is_infinite()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", c.value());
  return buf;
}

CutValue cut_weight(const Graph& g, const CutAssignment& a) {
  if (a.size() != g.vertex_count()) {
    throw std::invalid_argument("assignment size does not match vertex count");
  }
  if (g.vertex_count() == 1) return CutValue::infinite();
  if (!a.is_complete()) throw std::invalid_argument("assignment is incomplete");
  if (!a.is_valid_cut()) throw std::invalid_argument("a cut needs both sides nonempty");
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    if (a.side(e.u) != a.side(e.v)) total += e.w;
  }
  return CutValue(total);
}

double cut_weight_mask(const Graph& g, std::uint64_t x_mask) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    if (((x_mask >> e.u) ^ (x_mask >> e.v)) & 1U) total += e.w;
  }
  return total;
}

double crossing_weight(const Graph& g, std::span<const VertexId> s,
                       std::span<const VertexId> t) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> tag(n, 0);
  for (VertexId v : s) tag.at(v) |= 1;
  for (VertexId v : t) {
    if (tag.at(v) & 1) throw std::invalid_argument("crossing_weight needs disjoint sets");
    tag[v] |= 2;
  }
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    if ((tag[e.u] == 1 && tag[e.v] == 2) || (tag[e.u] == 2 && tag[e.v] == 1)) total += e.w;
  }
  return total;
}

PrefixGraph revealed_prefix(const Graph& g, const ArrivalOrder& order, std::size_t count) {
  if (order.size() != g.vertex_count()) {
    throw std::invalid_argument("order size does not match vertex count");
  }
  if (count < 1 || count > g.vertex_count()) {
    throw std::out_of_range("prefix length out of range");
  }
  const auto pos = order.positions();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] < count && pos[e.v] < count) {
      edges.push_back({static_cast<VertexId>(pos[e.u]), static_cast<VertexId>(pos[e.v]), e.w});
    }
  }
  PrefixGraph out{Graph(count, std::move(edges)), {}};
  out.to_original.assign(order.vertices().begin(), order.vertices().begin() + count);
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("degree_stats needs at least one vertex");
  DegreeStats stats;
  stats.degrees.assign(n, 0.0);
  for (const Edge& e : g.edges()) {
    stats.degrees[e.u] += e.w;
    stats.degrees[e.v] += e.w;
  }
  stats.min_degree = *std::min_element(stats.degrees.begin(), stats.degrees.end());
  stats.mean_degree = 2.0 * g.total_weight() / static_cast<double>(n);
  return stats;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.w > 0.0 && !seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  return reached == n;
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t n = 0, m = 0;
  bool header = false;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "p") {
      if (header) throw std::runtime_error("duplicate header on line " + std::to_string(lineno));
      if (!(ls >> n >> m)) throw std::runtime_error("malformed header on line " + std::to_string(lineno));
      header = true;
    } else if (tag == "e") {
      if (!header) throw std::runtime_error("edge before header on line " + std::to_string(lineno));
      long long u = -1, v = -1;
      double w = 1.0;
      if (!(ls >> u >> v)) throw std::runtime_error("malformed edge on line " + std::to_string(lineno));
      if (!(ls >> w)) w = 1.0;
      if (u < 0 || v < 0) throw std::runtime_error("negative vertex id on line " + std::to_string(lineno));
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    } else {
      throw std::runtime_error("unknown record '" + tag + "' on line " + std::to_string(lineno));
    }
  }
  if (!header) throw std::runtime_error("missing 'p <n> <m>' header");
  if (edges.size() != m) {
    throw std::runtime_error("header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  char buf[64];
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    if (e.w != 1.0) {
      std::snprintf(buf, sizeof buf, "%.17g", e.w);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  write_graph(out, g);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), 1.0});
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), 1.0});
  }
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<VertexId>(i), 1.0});
  return Graph(leaves + 1, std::move(edges));
}

}  // namespace onlinecut
