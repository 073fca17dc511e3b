#include <doctest.h>

#include "onlinecut/adversaries.hpp"
#include "onlinecut/advice.hpp"
#include "onlinecut/algorithms.hpp"
#include "onlinecut/errors.hpp"
#include "test_util.hpp"

using namespace onlinecut;

namespace {

CutAssignment partial_of(std::size_t n, std::initializer_list<VertexId> xs,
                         std::initializer_list<VertexId> ys = {}) {
  CutAssignment a(n);
  for (VertexId v : xs) a.assign(v, Side::X);
  for (VertexId v : ys) a.assign(v, Side::Y);
  return a;
}

}  // namespace

TEST_CASE("advice tape encodings") {
  const auto t = AdviceTape::from_bitstring("1011001");
  CHECK(t.length() == 7);
  CHECK(t.to_bitstring() == "1011001");
  CHECK(AdviceTape::from_hex(t.to_hex(), 7) == t);
  CHECK(t.prefix(3).to_bitstring() == "101");
  CHECK(t.prefix(20) == t);
  CHECK(AdviceTape::encode_index(5, 4).to_bitstring() == "0101");
  CHECK_THROWS_AS(AdviceTape::encode_index(9, 3), std::out_of_range);
  CHECK_THROWS_AS(AdviceTape::from_bitstring("10x"), std::invalid_argument);
  CHECK_THROWS_AS(AdviceTape::from_hex("zz", 8), std::invalid_argument);
  CHECK_THROWS_AS(AdviceTape::from_hex("ff", 20), std::invalid_argument);
  CHECK(AdviceTape().to_hex().empty());
  for (std::size_t n : {1, 2, 3, 4, 5, 8, 9, 1024, 1025})
    CHECK(ceil_log2(n) == static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))));
}

TEST_CASE("advice reader accounting") {
  const auto t = AdviceTape::from_bitstring("110101");
  AdviceReader r(t);
  CHECK(r.read_bit());
  CHECK(r.consumed() == 1);
  CHECK(r.read_index(3) == 0b101);
  CHECK(r.remaining() == 2);
  CHECK(r.read_index(2) == 0b01);
  CHECK_THROWS_AS(r.read_bit(), TapeExhausted);
  CHECK(r.consumed() == 6);
}

TEST_CASE("extendability oracle examples") {
  CHECK(extendability_oracle(complete_graph(3), partial_of(3, {0}), 1));
  CHECK(extendability_oracle(path_graph(3), partial_of(3, {0}), 1));
  CHECK_FALSE(extendability_oracle(path_graph(4), partial_of(4, {0, 1, 2}), 3));
  CHECK_FALSE(extendability_oracle(complete_graph(5), partial_of(5, {0, 1, 2, 3}), 4));
  // Y side: with 0 and 2 in X, vertex 1 in Y cuts two edges of P4.
  CHECK_FALSE(extendability_oracle(path_graph(4), partial_of(4, {0, 2}), 1, Side::Y));
  CHECK(extendability_oracle(path_graph(4), partial_of(4, {0}, {2}), 1, Side::Y));
  CHECK_THROWS_AS(extendability_oracle(path_graph(3), partial_of(3, {0}), 0), std::invalid_argument);
  CHECK_THROWS_AS(extendability_oracle(path_graph(30), partial_of(30, {0}), 1), CapacityError);
}

TEST_CASE("optimal advice examples") {
  const auto alg = advice_optimal();
  const Graph p3 = path_graph(3);
  const auto order = ArrivalOrder::identity(3);
  CHECK(tape_for_optimal(p3, order).to_bitstring() == "10");
  const auto rec = run(p3, order, *alg, AdviceTape::from_bitstring("10"));
  CHECK(rec.assignment.members(Side::X) == std::vector<VertexId>{0, 1});
  CHECK(rec.value.value() == 1);

  const Graph two_k2 = Graph::unweighted(4, {{0, 1}, {2, 3}});
  for_each_order(4, [&](const ArrivalOrder& o) {
    const auto r = run(two_k2, o, *alg, tape_for_optimal(two_k2, o));
    CHECK(r.value.value() == 0);
    CHECK(r.advice_bits == 3);
    return true;
  });

  const auto k2 = run(complete_graph(2), ArrivalOrder::identity(2), *alg,
                      tape_for_optimal(complete_graph(2), ArrivalOrder::identity(2)));
  CHECK(k2.value.value() == 1);
  CHECK(k2.advice_bits == 1);
  CHECK_THROWS_AS(run(p3, order, *alg, AdviceTape::from_bitstring("1")), TapeExhausted);
}

TEST_CASE("optimal advice reaches opt with n-1 bits on random graphs") {
  std::mt19937 rng(404);
  const auto alg = advice_optimal();
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = testutil::random_graph(n, 0.2 + 0.1 * (trial % 7), trial % 4 == 0 ? 0 : 3, rng);
    const double opt = testutil::naive_mincut(g);
    for (int j = 0; j < 5; ++j) {
      std::vector<VertexId> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      const ArrivalOrder order(p);
      const auto tape = tape_for_optimal(g, order);
      CHECK(tape.length() == n - 1);
      const auto rec = run(g, order, *alg, tape);
      CHECK(rec.value.value() == opt);
      CHECK(rec.advice_bits == n - 1);
      CHECK(AdviceTape::from_hex(tape.to_hex(), tape.length()) == tape);
    }
  }
}

TEST_CASE("min-degree advice examples") {
  const auto scheme = min_degree_scheme();
  const Graph star = star_graph(4);
  const ArrivalOrder order({0, 3, 1, 4, 2});
  const auto tape = scheme.tapes(star, order);
  CHECK(tape.length() == 3);
  CHECK(decode_min_degree_tape(tape, 5) == 2);  // vertex 1 arrives third
  const auto rec = run(star, order, *scheme.algorithm, tape);
  CHECK(rec.value.value() == 1);
  CHECK(rec.advice_bits == 3);

  CHECK(run(complete_graph(4), ArrivalOrder::identity(4), *scheme.algorithm,
            scheme.tapes(complete_graph(4), ArrivalOrder::identity(4)))
            .value.value() == 3);

  const Graph g = gen_gnp(50, 0.3, 3);
  const auto o = ArrivalOrder::identity(50);
  const auto r = run(g, o, *scheme.algorithm, scheme.tapes(g, o));
  CHECK(r.value.value() == degree_stats(g).min_degree);
  CHECK(r.value.value() == testutil::naive_min_degree(g));
  CHECK(r.advice_bits == 6);

  CHECK_THROWS_AS(decode_min_degree_tape(AdviceTape::encode_index(6, 3), 5), std::out_of_range);
  CHECK_THROWS_AS(decode_min_degree_tape(AdviceTape::encode_index(1, 2), 5), std::out_of_range);
}

TEST_CASE("min-degree advice value equals the minimum degree") {
  std::mt19937 rng(12);
  const auto scheme = min_degree_scheme();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    const Graph g = testutil::random_graph(n, 0.4, trial % 2 ? 3 : 0, rng);
    std::vector<VertexId> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const ArrivalOrder o(p);
    const auto r = run(g, o, *scheme.algorithm, scheme.tapes(g, o));
    CHECK(r.value.value() == testutil::naive_min_degree(g));
    CHECK(r.advice_bits == ceil_log2(n));
  }
}

TEST_CASE("truncated advice stays within its budget") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = testutil::random_graph(n, 0.5, 2, rng);
    const double opt = testutil::naive_mincut(g);
    for (std::size_t b = 0; b <= n; ++b) {
      const auto scheme = truncated_optimal_scheme(b);
      const auto o = ArrivalOrder::identity(n);
      const auto r = run(g, o, *scheme.algorithm, scheme.tapes(g, o));
      CHECK(r.advice_bits <= b);
      CHECK(r.assignment.is_valid_cut());
      if (b >= n - 1) CHECK(r.value.value() == opt);
    }
  }
}

TEST_CASE("fooling pair examples") {
  const auto fig1 = fig1_family(10);
  const auto pair = fooling_pair_search(truncated_optimal_scheme(4), fig1, 4);
  REQUIRE(pair.has_value());
  CHECK(pair->distinct_classes == 32);
  CHECK(pair->first_class != pair->second_class);
  CHECK(pair->shared_tape.length() <= 4);
  const double fooled_opt = pair->fooled == pair->first ? pair->first_opt : pair->second_opt;
  CHECK(pair->forced_value > fooled_opt);
  // Independent check: both instances really get the same truncated tape.
  const auto full = truncated_optimal_scheme(4);
  CHECK(full.tapes(fig1.instances[pair->first], fig1.order) ==
        full.tapes(fig1.instances[pair->second], fig1.order));
  CHECK(testutil::naive_mincut(fig1.instances[pair->fooled]) == fooled_opt);

  const auto fig2 = fig2_family(12, 4, 1);
  const auto p2 = fooling_pair_search(truncated_optimal_scheme(2), fig2, 2);
  REQUIRE(p2.has_value());
  CHECK(p2->forced_value >= 3);
  const auto scheme = truncated_optimal_scheme(2);
  const Graph& fooled = fig2.instances[p2->fooled];
  CHECK(run(fooled, fig2.order, *scheme.algorithm, scheme.tapes(fooled, fig2.order)).value.value() ==
        p2->forced_value);

  CHECK_FALSE(fooling_pair_search(truncated_optimal_scheme(3), fig1_family(8), 3).has_value());
}

TEST_CASE("fooling pair search validates the family") {
  InstanceFamily fam;
  fam.instances = {path_graph(4)};
  fam.prefix = {0, 1};
  fam.order = ArrivalOrder::identity(4);
  CHECK_THROWS_AS(fooling_pair_search(truncated_optimal_scheme(0), fam, 0), std::invalid_argument);
  fam.prefix = {0, 2};
  CHECK_THROWS_AS(fooling_pair_search(truncated_optimal_scheme(0), fam, 0), std::invalid_argument);
}
