#pragma once

// Adversarial instance families and the adaptive two-vertex games.
//
// Canonical vertex ids:
//   thm1a  x=0, y=1, clique 2..n-2, z=n-1 (isolated); xy is the missing edge
//   thm1b  clique 0..n-2, z=n-1 adjacent to 0..k-1
//   fig1   prefix 0..n-5 (S or T per label), x1..x4 = n-4..n-1
//   fig2   A=0..p-1, B=p..2p-1, prefix 2p..n-1 (C or D per label),
//          crossing edges A[i]-B[i] for i < k
//   gnp    pairs (u,v), u<v, drawn in lexicographic order

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "onlinecut/advice.hpp"
#include "onlinecut/engine.hpp"
#include "onlinecut/graph.hpp"

namespace onlinecut {

using Roles = std::map<std::string, std::vector<VertexId>>;

struct FamilyInstance {
  std::string family;
  Graph graph;
  Roles roles;
  /// The adversary's arrival order (prefix first for fig1/fig2).
  ArrivalOrder order;
};

FamilyInstance gen_thm1a(std::size_t n);
FamilyInstance gen_thm1b(std::size_t n, std::size_t k);

/// labels[j] true puts prefix vertex j in S (next to x1, x2).
FamilyInstance gen_fig1(std::size_t n, const std::vector<bool>& labels);
/// Every labeling of the n-4 prefix vertices, in binary counting order.
InstanceFamily fig1_family(std::size_t n);

struct Fig2Options {
  /// Enforce p > k+1. When off, p >= k is enough and the generator checks
  /// by brute force that the minimum cut is still k.
  bool require_gap = true;
};

/// labels[j] true puts prefix vertex j in C (joined to all of A).
FamilyInstance gen_fig2(std::size_t n, std::size_t p, std::size_t k,
                        const std::vector<bool>& labels, Fig2Options options = {});
InstanceFamily fig2_family(std::size_t n, std::size_t p, std::size_t k,
                           Fig2Options options = {});
/// |C| = |D| = round(eps n) and |A| = |B| = (n - 2|C|) / 2.
FamilyInstance gen_fig2_balanced(std::size_t n, double eps, std::size_t k);

/// Erdos-Renyi G(n, prob), reproducible per seed.
Graph gen_gnp(std::size_t n, double prob, std::uint64_t seed);
/// Rejection-samples a connected G(n, prob); attempt i uses stream index i.
Graph gen_connected_gnp(std::size_t n, double prob, std::uint64_t seed,
                        std::size_t max_attempts = 1000);

/// Connected graph with exactly m unit edges (n-1 <= m <= n(n-1)/2): a
/// random spanning tree plus uniformly chosen extra pairs.
Graph gen_sparse_connected(std::size_t n, std::size_t m, std::uint64_t seed);

enum class Thm1Variant { A, B };

struct GameResult {
  Thm1Variant variant = Thm1Variant::A;
  FamilyInstance instance;  // the instance the adversary committed to
  RunRecord record;
  double forced_value = 0.0;
  double bound = 0.0;  // n-3 for variant a, n-2 for variant b
  std::vector<std::string> transcript;
};

/// Plays the adaptive adversary against `algorithm`: reveals two
/// nonadjacent (variant a) or adjacent (variant b) vertices, watches where
/// they go, then fixes their identities so that the final cut is large.
GameResult adaptive_thm1_game(const OnlineCutAlgorithm& algorithm, Thm1Variant variant,
                              std::size_t n, std::size_t k = 1);

}  // namespace onlinecut
