#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace onlinecut {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId vertex = 0;
  double w = 0.0;
};

/// Undirected loopless graph with nonnegative edge weights.
///
/// Edges are stored once per unordered pair with u < v, sorted ascending.
/// Duplicate pairs passed to the constructor are folded by adding their
/// weights, which is how parallel edges are represented.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::vector<Edge> edges);

  /// Unit-weight graph from an edge list.
  static Graph unweighted(std::size_t n,
                          std::span<const std::pair<VertexId, VertexId>> edges);
  static Graph unweighted(std::size_t n,
                          std::initializer_list<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }

  /// Weight between u and v, 0 when no edge is stored.
  double weight(VertexId u, VertexId v) const;
  double total_weight() const { return total_weight_; }

  /// True when every weight is an integer; comparisons are then exact.
  bool integral_weights() const { return integral_; }
  /// Tie tolerance for comparisons of weight sums on this graph.
  double tolerance() const { return integral_ ? 0.0 : 1e-9; }

  /// Same edge set with new weights, given in edges() order.
  Graph with_weights(std::span<const double> weights) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  void build();

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  double total_weight_ = 0.0;
  bool integral_ = true;
};

enum class Side : std::uint8_t { Unassigned, X, Y };

constexpr Side opposite(Side s) {
  return s == Side::X ? Side::Y : (s == Side::Y ? Side::X : Side::Unassigned);
}

const char* to_string(Side s);

/// Per-vertex side labels. Partial while an online run is in progress.
class CutAssignment {
 public:
  CutAssignment() = default;
  explicit CutAssignment(std::size_t n) : sides_(n, Side::Unassigned) {}
  explicit CutAssignment(std::vector<Side> sides) : sides_(std::move(sides)) {}

  /// Complete assignment with bit v of mask set meaning v is in X.
  static CutAssignment from_x_mask(std::size_t n, std::uint64_t mask);
  /// Complete assignment with the listed vertices in X, all others in Y.
  static CutAssignment from_x_side(std::size_t n, std::span<const VertexId> x_side);

  std::size_t size() const { return sides_.size(); }
  Side side(VertexId v) const { return sides_.at(v); }
  void assign(VertexId v, Side s) { sides_.at(v) = s; }
  std::span<const Side> sides() const { return sides_; }

  bool is_complete() const;
  /// Complete with both sides nonempty.
  bool is_valid_cut() const;

  std::vector<VertexId> members(Side s) const;
  std::size_t count(Side s) const;
  CutAssignment swapped() const;
  /// Swap labels if needed so that vertex v sits in X.
  CutAssignment normalized_to(VertexId v) const;
  std::uint64_t x_mask() const;

  friend bool operator==(const CutAssignment&, const CutAssignment&) = default;

 private:
  std::vector<Side> sides_;
};

/// A permutation of vertex ids; order[i] is the (i+1)-th arrival.
class ArrivalOrder {
 public:
  ArrivalOrder() = default;
  explicit ArrivalOrder(std::vector<VertexId> order);

  static ArrivalOrder identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  VertexId operator[](std::size_t i) const { return order_[i]; }
  std::span<const VertexId> vertices() const { return order_; }
  /// position()[v] is the arrival index of vertex v.
  std::vector<std::size_t> positions() const;

  std::string to_string() const;
  static ArrivalOrder parse(const std::string& text);

  friend bool operator==(const ArrivalOrder&, const ArrivalOrder&) = default;

 private:
  std::vector<VertexId> order_;
};

/// Cut weight, or infinity for a single-vertex graph (no cut exists).
class CutValue {
 public:
  constexpr CutValue() = default;
  constexpr explicit CutValue(double v) : value_(v) {}
  static constexpr CutValue infinite() {
    CutValue c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws std::domain_error when infinite.
  double value() const;

  friend constexpr bool operator==(const CutValue&, const CutValue&) = default;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

std::string to_string(const CutValue& c);

/// Total weight of edges crossing the cut. Requires a complete, valid cut,
/// except that a single-vertex graph yields CutValue::infinite().
CutValue cut_weight(const Graph& g, const CutAssignment& a);

/// Weight of the cut given by an X-side bitmask (n <= 64), no validation.
double cut_weight_mask(const Graph& g, std::uint64_t x_mask);

/// Total weight of edges with one endpoint in s and the other in t.
double crossing_weight(const Graph& g, std::span<const VertexId> s,
                       std::span<const VertexId> t);

struct PrefixGraph {
  Graph graph;                       // vertex j is the (j+1)-th arrival
  std::vector<VertexId> to_original; // to_original[j] = order[j]
};

/// Induced subgraph on the first `count` arrivals of `order`.
PrefixGraph revealed_prefix(const Graph& g, const ArrivalOrder& order, std::size_t count);

struct DegreeStats {
  std::vector<double> degrees;
  double min_degree = 0.0;
  double mean_degree = 0.0;
};

DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);

// Text format:
//   p <n> <m>
//   e <u> <v> [<w>]      (m lines, 0-based ids, default weight 1)
// Lines starting with '#' are comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Small named graphs used all over the tests and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center is vertex 0

}  // namespace onlinecut
