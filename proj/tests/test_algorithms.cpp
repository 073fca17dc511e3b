#include <doctest.h>

#include <algorithm>

#include "onlinecut/adversaries.hpp"
#include "onlinecut/algorithms.hpp"
#include "onlinecut/engine.hpp"
#include "test_util.hpp"

using namespace onlinecut;

namespace {

double value_of(const Graph& g, std::vector<VertexId> order, const AlgorithmPtr& alg) {
  return run(g, ArrivalOrder(std::move(order)), *alg).value.value();
}

}  // namespace

TEST_CASE("trivial_first_vertex examples") {
  const auto alg = trivial_first_vertex();
  CHECK(value_of(star_graph(4), {1, 0, 2, 3, 4}, alg) == 1);
  CHECK(value_of(complete_graph(4), {2, 3, 0, 1}, alg) == 3);
  const auto inst = gen_thm1b(8, 2);
  const VertexId z = inst.roles.at("z").front();
  std::vector<VertexId> order{z};
  for (VertexId v = 0; v < 8; ++v)
    if (v != z) order.push_back(v);
  CHECK(value_of(inst.graph, order, alg) == 2);
}

TEST_CASE("sparse_alg puts only the first vertex in Y") {
  const auto alg = sparse_alg();
  const auto rec = run(path_graph(3), ArrivalOrder({1, 0, 2}), *alg);
  CHECK(rec.value.value() == 2);
  CHECK(rec.labels_swapped);
  CHECK(rec.steps[0].side == Side::Y);
  CHECK(rec.steps[1].side == Side::X);
  CHECK(rec.steps[2].side == Side::X);
  CHECK(rec.assignment.side(1) == Side::X);
  CHECK(rec.assignment.count(Side::X) == 1);
  CHECK(expected_value_random_order(path_graph(3), *alg, ExpectationMode::exhaustive()).mean ==
        doctest::Approx(4.0 / 3.0));
}

TEST_CASE("greedy_min examples") {
  const auto alg = greedy_min();
  const auto k3 = run(complete_graph(3), ArrivalOrder({0, 1, 2}), *alg);
  CHECK(k3.steps[2].side == Side::Y);
  CHECK(k3.value.value() == 2);
  // P4 a-b-c-d with order (a, d, b, c)
  const auto p4 = run(path_graph(4), ArrivalOrder({0, 3, 1, 2}), *alg);
  CHECK(p4.steps[2].side == Side::X);
  CHECK(p4.steps[3].side == Side::X);
  CHECK(p4.value.value() == 1);
  CHECK(value_of(complete_graph(2), {0, 1}, alg) == 1);
}

TEST_CASE("greedy_max examples") {
  const auto alg = greedy_max();
  const auto k4 = run(complete_graph(4), ArrivalOrder({0, 1, 2, 3}), *alg);
  CHECK(k4.steps[2].side == Side::Y);
  CHECK(k4.steps[3].side == Side::X);
  CHECK(k4.value.value() == 4);
  CHECK(value_of(path_graph(3), {0, 2, 1}, alg) == 1);
  CHECK(value_of(path_graph(3), {0, 1, 2}, alg) == 2);
  // Largest value over orders (best for a maximizer).
  CHECK(worst_case_value(path_graph(3), *alg).value == 2);
  CHECK(best_case_value(path_graph(3), *alg).value == 1);
  CHECK(value_of(complete_graph(2), {1, 0}, alg) == 1);
}

TEST_CASE("greedy_max places v2 in Y even when it is not adjacent to v1") {
  const auto rec = run(path_graph(3), ArrivalOrder({0, 2, 1}), *greedy_max());
  CHECK(rec.steps[1].side == Side::Y);
}

TEST_CASE("greedy decisions match an independent simulation") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = testutil::random_graph(n, 0.5, trial % 3 == 0 ? 0 : 2, rng);
    std::vector<VertexId> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    for (bool maximize : {false, true}) {
      const auto alg = maximize ? greedy_max() : greedy_min();
      const auto rec = run(g, ArrivalOrder(p), *alg);
      const auto sim = testutil::simulate_greedy(g, p, maximize);
      CHECK(rec.value.value() == doctest::Approx(sim.value));
      for (VertexId v = 0; v < n; ++v)
        CHECK((rec.assignment.side(v) == Side::X) == (sim.side[v] == 0));
      // The logged comparator inputs are the crossing weights at placement time.
      for (std::size_t i = 2; i < n; ++i) {
        double fx = 0, fy = 0;
        for (std::size_t j = 0; j < i; ++j) {
          const double w = g.weight(p[i], p[j]);
          (sim.side[p[j]] == 0 ? fx : fy) += w;
        }
        CHECK(rec.steps[i].f_x == doctest::Approx(fx));
        CHECK(rec.steps[i].f_y == doctest::Approx(fy));
      }
    }
  }
}

TEST_CASE("tie rule equivalence probe") {
  // Runs "side of the previous vertex" against "Y while |X| = 1, else X"
  // over all orders of small graphs and records where they disagree.
  std::mt19937 rng(5);
  std::size_t runs = 0, divergent = 0, value_divergent = 0;
  std::size_t best_divergent = 0;
  std::string example;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const Graph g = testutil::random_graph(n, 0.6, 2, rng);
    for (bool maximize : {false, true}) {
      const auto prev = maximize ? greedy_max() : greedy_min();
      const auto count = maximize ? greedy_max(TieRule::SideCount) : greedy_min(TieRule::SideCount);
      for_each_order(n, [&](const ArrivalOrder& o) {
        const auto a = run(g, o, *prev);
        const auto b = run(g, o, *count);
        ++runs;
        if (!(a.assignment == b.assignment)) {
          ++divergent;
          if (example.empty()) example = "order " + o.to_string();
        }
        if (a.value.value() != b.value.value()) ++value_divergent;
        CHECK(b.assignment.is_valid_cut());
        return true;
      });
      const double p = maximize ? worst_case_value(g, *prev).value : best_case_value(g, *prev).value;
      const double c = maximize ? worst_case_value(g, *count).value : best_case_value(g, *count).value;
      if (p != c) ++best_divergent;
    }
  }
  MESSAGE("tie rules: " << runs << " runs, " << divergent << " with different cuts, "
                        << value_divergent << " with different values, " << best_divergent
                        << " graphs with a different best value; first: " << example);
  CHECK(runs > 0);
  // The two rules coincide while X holds one vertex; once |X| > 1 they can
  // differ on ties, so a divergence is expected to show up.
  CHECK(divergent > 0);
}

TEST_CASE("trivial worst case is within n-1 on k-connected graphs") {
  for (std::size_t n = 4; n <= 8; ++n)
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const auto inst = gen_thm1b(n, k);
      const double opt = testutil::naive_mincut(inst.graph);
      const double worst = worst_case_value(inst.graph, *trivial_first_vertex()).value;
      CHECK(worst <= n - 1);
      CHECK(n - 1 <= (n - 1) / static_cast<double>(k) * opt);
    }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4 + rng() % 4;
    const Graph g = testutil::random_graph(n, 0.7, 1, rng);
    const double opt = testutil::naive_mincut(g);
    if (opt < 1) continue;
    CHECK(worst_case_value(g, *trivial_first_vertex()).value <= n - 1);
  }
}

TEST_CASE("greedy_submodular_max examples") {
  const auto cut = SetFunction::cut_function(path_graph(3));
  const std::vector<std::uint32_t> ac_b{0, 2, 1};
  const auto r = greedy_submodular_max(cut, ac_b);
  CHECK(r.subset == 0b101);
  CHECK(r.value == 2);

  const auto f = SetFunction::from_table({0, 1, 1, -1});
  const std::vector<std::uint32_t> xy{0, 1};
  const auto c = greedy_submodular_max(f, xy);
  CHECK(c.subset == 0b01);
  CHECK(c.value == 1);

  const SetFunction zero(3, [](std::uint32_t) { return 0.0; });
  const std::vector<std::uint32_t> any{2, 0, 1};
  CHECK(greedy_submodular_max(zero, any).subset == 0b111);
  CHECK(greedy_submodular_max(zero, any).value == 0);

  const std::vector<std::uint32_t> dup{0, 0};
  CHECK_THROWS_AS(greedy_submodular_max(f, dup), std::invalid_argument);
}

TEST_CASE("greedy_submodular_min_demo examples") {
  const auto f = SetFunction::from_table({0, 1, 1, -1});
  const std::vector<std::uint32_t> xy{0, 1};
  const auto r = greedy_submodular_min_demo(f, xy);
  CHECK(r.subset == 0);
  CHECK(r.value == 0);
  CHECK(brute_force_set_optimum(f, Sense::Minimize).value == -1);

  const auto cut = SetFunction::cut_function(path_graph(3));
  const std::vector<std::uint32_t> order{1, 0, 2};
  CHECK(greedy_submodular_min_demo(cut, order).value >= 0);
  const SetFunction size(4, [](std::uint32_t m) { return static_cast<double>(std::popcount(m)); });
  const std::vector<std::uint32_t> all{3, 1, 0, 2};
  CHECK(greedy_submodular_min_demo(size, all).subset == 0);
}

TEST_CASE("greedy submodular maximizer properties") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    // Monotone: weighted coverage with positive item weights and no costs.
    std::vector<std::vector<std::size_t>> sets(n);
    for (auto& s : sets)
      for (std::size_t item = 0; item < 6; ++item)
        if (rng() % 3 == 0) s.push_back(item);
    const auto f = SetFunction::coverage(sets, {1, 2, 3, 1, 2, 3});
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto r = greedy_submodular_max(f, order);
    CHECK(r.subset == f.full_mask());
    std::uint32_t cur = 0;
    for (const auto& step : r.steps) {
      if (!step.accepted) continue;
      CHECK(f(cur | (1U << step.element)) >= f(cur));
      cur |= 1U << step.element;
    }

    const auto g = SetFunction::coverage(sets, {1, 2, 3, 1, 2, 3}, std::vector<double>(n, 1.5));
    const auto q = greedy_submodular_max(g, order);
    cur = 0;
    for (const auto& step : q.steps) {
      if (!step.accepted) continue;
      CHECK(g(cur | (1U << step.element)) >= g(cur));
      cur |= 1U << step.element;
    }
    CHECK(cur == q.subset);
    CHECK(q.value == g(q.subset));
  }
}

TEST_CASE("algorithm registry") {
  for (const auto& key : algorithm_keys()) CHECK(make_algorithm(key)->name() == key);
  CHECK(make_algorithm("greedy-min/side-count")->name() == "greedy-min/side-count");
  CHECK_THROWS_AS(make_algorithm("nope"), std::invalid_argument);
  for (const auto& key : algorithm_keys()) CHECK_FALSE(make_algorithm(key)->uses_advice());
}
