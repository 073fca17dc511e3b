#include "onlinecut/adversaries.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "onlinecut/errors.hpp"
#include "onlinecut/oracles.hpp"
#include "onlinecut/random.hpp"

namespace onlinecut {
namespace {

std::vector<VertexId> id_range(std::size_t begin, std::size_t end) {
  std::vector<VertexId> out(end - begin);
  std::iota(out.begin(), out.end(), static_cast<VertexId>(begin));
  return out;
}

std::vector<bool> bits_of(std::uint64_t value, std::size_t width) {
  std::vector<bool> out(width);
  for (std::size_t j = 0; j < width; ++j) out[j] = (value >> j) & 1U;
  return out;
}

}  // namespace

FamilyInstance gen_thm1a(std::size_t n) {
  if (n < 4) throw std::invalid_argument("thm1a needs n >= 4");
  std::vector<Edge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) {
    for (VertexId v = u + 1; v + 1 < n; ++v) {
      if (u == 0 && v == 1) continue;
      edges.push_back({u, v, 1.0});
    }
  }
  FamilyInstance out;
  out.family = "thm1a";
  out.graph = Graph(n, std::move(edges));
  out.roles = {{"x", {0}}, {"y", {1}}, {"z", {static_cast<VertexId>(n - 1)}},
               {"clique", id_range(0, n - 1)}};
  out.order = ArrivalOrder::identity(n);
  return out;
}

FamilyInstance gen_thm1b(std::size_t n, std::size_t k) {
  if (k < 1 || n <= k || n < 3) throw std::invalid_argument("thm1b needs n > k >= 1 and n >= 3");
  std::vector<Edge> edges;
  const auto z = static_cast<VertexId>(n - 1);
  for (VertexId u = 0; u < z; ++u) {
    for (VertexId v = u + 1; v < z; ++v) edges.push_back({u, v, 1.0});
  }
  for (VertexId u = 0; u < k; ++u) edges.push_back({u, z, 1.0});
  FamilyInstance out;
  out.family = "thm1b";
  out.graph = Graph(n, std::move(edges));
  out.roles = {{"z", {z}}, {"clique", id_range(0, n - 1)}, {"z_neighbors", id_range(0, k)}};
  out.order = ArrivalOrder::identity(n);
  return out;
}

FamilyInstance gen_fig1(std::size_t n, const std::vector<bool>& labels) {
  if (n < 6) throw std::invalid_argument("fig1 needs n >= 6");
  if (labels.size() != n - 4) throw std::invalid_argument("fig1 needs one label per prefix vertex");
  const auto x1 = static_cast<VertexId>(n - 4);
  std::vector<Edge> edges = {{x1, x1 + 1, 1.0}, {x1 + 1, x1 + 2, 1.0}, {x1 + 2, x1 + 3, 1.0}};
  FamilyInstance out;
  out.family = "fig1";
  out.roles["S"];
  out.roles["T"];
  for (VertexId j = 0; j < n - 4; ++j) {
    const VertexId a = labels[j] ? x1 : x1 + 2;
    edges.push_back({j, a, 1.0});
    edges.push_back({j, a + 1, 1.0});
    out.roles[labels[j] ? "S" : "T"].push_back(j);
  }
  out.graph = Graph(n, std::move(edges));
  out.roles["prefix"] = id_range(0, n - 4);
  for (VertexId i = 0; i < 4; ++i) out.roles["x" + std::to_string(i + 1)] = {x1 + i};
  out.order = ArrivalOrder::identity(n);
  return out;
}

InstanceFamily fig1_family(std::size_t n) {
  if (n < 6 || n - 4 > 20) throw std::invalid_argument("fig1 family needs 6 <= n <= 24");
  InstanceFamily family;
  family.prefix = id_range(0, n - 4);
  family.order = ArrivalOrder::identity(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 4)); ++m) {
    family.instances.push_back(gen_fig1(n, bits_of(m, n - 4)).graph);
  }
  return family;
}

FamilyInstance gen_fig2(std::size_t n, std::size_t p, std::size_t k,
                        const std::vector<bool>& labels, Fig2Options options) {
  if (k < 1) throw std::invalid_argument("fig2 needs k >= 1");
  if (options.require_gap ? p <= k + 1 : p < k) {
    throw std::invalid_argument(options.require_gap ? "fig2 needs p > k+1" : "fig2 needs p >= k");
  }
  if (n < 2 * p + 2) throw std::invalid_argument("fig2 needs n >= 2p+2");
  if (labels.size() != n - 2 * p) throw std::invalid_argument("fig2 needs one label per prefix vertex");
  std::vector<Edge> edges;
  const auto P = static_cast<VertexId>(p);
  for (VertexId base : {VertexId{0}, P}) {
    for (VertexId u = 0; u < P; ++u) {
      for (VertexId v = u + 1; v < P; ++v) edges.push_back({base + u, base + v, 1.0});
    }
  }
  for (VertexId i = 0; i < k; ++i) edges.push_back({i, P + i, 1.0});
  FamilyInstance out;
  out.family = "fig2";
  out.roles["C"];
  out.roles["D"];
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const auto v = static_cast<VertexId>(2 * p + j);
    const VertexId base = labels[j] ? 0 : P;
    for (VertexId u = 0; u < P; ++u) edges.push_back({base + u, v, 1.0});
    out.roles[labels[j] ? "C" : "D"].push_back(v);
  }
  out.graph = Graph(n, std::move(edges));
  out.roles["A"] = id_range(0, p);
  out.roles["B"] = id_range(p, 2 * p);
  out.roles["A'"] = id_range(0, k);
  out.roles["B'"] = id_range(p, p + k);
  out.roles["prefix"] = id_range(2 * p, n);
  std::vector<VertexId> order = id_range(2 * p, n);
  for (VertexId v = 0; v < 2 * p; ++v) order.push_back(v);
  out.order = ArrivalOrder(std::move(order));
  if (!options.require_gap) {
    const double lambda = brute_force_mincut(out.graph).value.value();
    if (lambda != static_cast<double>(k)) {
      throw ContractViolation("relaxed fig2 instance has minimum cut " + std::to_string(lambda) +
                              ", expected " + std::to_string(k));
    }
  }
  return out;
}

InstanceFamily fig2_family(std::size_t n, std::size_t p, std::size_t k, Fig2Options options) {
  if (n < 2 * p + 2 || n - 2 * p > 20) throw std::invalid_argument("fig2 family size out of range");
  const std::size_t width = n - 2 * p;
  InstanceFamily family;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << width); ++m) {
    FamilyInstance inst = gen_fig2(n, p, k, bits_of(m, width), options);
    if (m == 0) {
      family.prefix = inst.roles.at("prefix");
      family.order = inst.order;
    }
    family.instances.push_back(std::move(inst.graph));
  }
  return family;
}

FamilyInstance gen_fig2_balanced(std::size_t n, double eps, std::size_t k) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  const auto c = static_cast<std::size_t>(std::llround(eps * static_cast<double>(n)));
  if (c == 0 || 2 * c >= n || (n - 2 * c) % 2 != 0) {
    throw std::invalid_argument("n and eps do not give integral part sizes");
  }
  const std::size_t p = (n - 2 * c) / 2;
  std::vector<bool> labels(2 * c, false);
  for (std::size_t j = 0; j < c; ++j) labels[j] = true;
  FamilyInstance out = gen_fig2(n, p, k, labels, Fig2Options{p > k + 1});
  out.family = "fig2-balanced";
  return out;
}

Graph gen_gnp(std::size_t n, double prob, std::uint64_t seed) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("prob must lie in [0, 1]");
  Rng rng = make_rng(seed, "gnp");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (bernoulli(rng, prob)) edges.push_back({u, v, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_connected_gnp(std::size_t n, double prob, std::uint64_t seed, std::size_t max_attempts) {
  for (std::size_t i = 0; i < max_attempts; ++i) {
    Graph g = gen_gnp(n, prob, derive_seed(seed, stream_id("connected-gnp"), i));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected G(n,p) sample within the attempt limit");
}

Graph gen_sparse_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m < n - 1 || m > n * (n - 1) / 2) {
    throw std::invalid_argument("need n >= 2 and n-1 <= m <= n(n-1)/2");
  }
  Rng rng = make_rng(seed, "sparse-connected");
  const std::vector<VertexId> perm = random_permutation(n, rng);
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  auto add = [&](VertexId u, VertexId v) {
    used[u][v] = used[v][u] = true;
    edges.push_back({u, v, 1.0});
  };
  // Each vertex after the first attaches to a uniformly chosen earlier one.
  for (std::size_t i = 1; i < n; ++i) add(perm[i], perm[uniform_index(rng, i)]);
  std::vector<std::pair<VertexId, VertexId>> spare;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!used[u][v]) spare.emplace_back(u, v);
    }
  }
  shuffle(std::span(spare), rng);
  for (std::size_t i = 0; edges.size() < m; ++i) add(spare[i].first, spare[i].second);
  return Graph(n, std::move(edges));
}

GameResult adaptive_thm1_game(const OnlineCutAlgorithm& algorithm, Thm1Variant variant,
                              std::size_t n, std::size_t k) {
  if (algorithm.uses_advice()) throw std::invalid_argument("the game is for algorithms without advice");
  GameResult out;
  out.variant = variant;
  const bool a = variant == Thm1Variant::A;
  out.instance = a ? gen_thm1a(n) : gen_thm1b(n, k);
  out.bound = static_cast<double>(a ? n - 3 : n - 2);

  OnlineSession session(algorithm);
  const Side s1 = session.reveal({}, 0);
  out.transcript.push_back(std::string("reveal v1: no edges -> ") + to_string(s1));
  std::vector<BackEdge> second;
  if (!a) second.push_back({0, 1.0});
  const Side s2 = session.reveal(second, 1);
  out.transcript.push_back(std::string("reveal v2: ") + (a ? "not adjacent to v1" : "adjacent to v1") +
                           " -> " + to_string(s2));

  const bool same = s1 == s2;
  const auto last = static_cast<VertexId>(n - 1);
  std::vector<VertexId> order;
  if (a && same) {
    out.transcript.push_back("same side: declare v1=x, v2=z");
    order = {0, last};
    for (VertexId v = 1; v < last; ++v) order.push_back(v);
  } else if (a) {
    out.transcript.push_back("different sides: declare v1=x, v2=y");
    order = id_range(0, n);
  } else if (same) {
    out.transcript.push_back("same side: declare v1=z, v2 one of its neighbors");
    order = {last, 0};
    for (VertexId v = 1; v < last; ++v) order.push_back(v);
  } else {
    out.transcript.push_back("different sides: declare neither v1 nor v2 is z");
    order = id_range(0, n);
  }
  out.instance.order = ArrivalOrder(order);
  out.transcript.push_back("order: " + out.instance.order.to_string());

  const Graph& g = out.instance.graph;
  const std::vector<std::size_t> positions = out.instance.order.positions();
  for (std::size_t i = 0; i < 2; ++i) {
    // The committed instance must agree with what was already shown.
    const std::vector<BackEdge> shown = back_edges_of(g, out.instance.order, positions, i);
    if (shown.size() != (i == 1 && !a ? 1U : 0U)) {
      throw ContractViolation("declared identities contradict the revealed edges");
    }
  }
  for (std::size_t i = 2; i < n; ++i) {
    session.reveal(back_edges_of(g, out.instance.order, positions, i), out.instance.order[i]);
  }
  out.record = finish_run(g, out.instance.order, session);
  out.forced_value = out.record.value.value();

  const RunRecord replay = run(g, out.instance.order, algorithm);
  if (!(replay.value == out.record.value) || !(replay.assignment == out.record.assignment)) {
    throw ContractViolation("algorithm " + algorithm.name() +
                            " behaved differently on replay; it is not deterministic");
  }
  out.transcript.push_back("final cut " + to_string(out.record.value) + " (bound " +
                           std::to_string(static_cast<long long>(out.bound)) + ")");
  return out;
}

}  // namespace onlinecut
