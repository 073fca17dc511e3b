#include "onlinecut/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "onlinecut/errors.hpp"
#include "onlinecut/parallel.hpp"
#include "onlinecut/random.hpp"

namespace onlinecut {

double Arrival::weight_to(Side s) const {
  double total = 0.0;
  for (const BackEdge& e : edges) {
    if (prefix.side(e.arrival) == s) total += e.w;
  }
  return total;
}

OnlineSession::OnlineSession(const OnlineCutAlgorithm& algorithm, std::optional<AdviceTape> tape)
    : name_(algorithm.name()), policy_(algorithm.start()), tape_(std::move(tape)) {
  if (algorithm.uses_advice() != tape_.has_value()) {
    throw std::invalid_argument(algorithm.uses_advice()
                                    ? "algorithm " + name_ + " needs an advice tape"
                                    : "algorithm " + name_ + " does not take advice");
  }
  if (tape_) reader_.emplace(*tape_);
}

Side OnlineSession::reveal(std::vector<BackEdge> edges, VertexId vertex) {
  const std::size_t index = sides_.size();
  for (const BackEdge& e : edges) {
    if (e.arrival >= index) throw std::invalid_argument("back edge points at an unrevealed vertex");
    if (!(e.w >= 0.0)) throw std::invalid_argument("back edge weight must be nonnegative");
  }
  edges_.push_back(std::move(edges));
  const PrefixView view(edges_, sides_);
  const Arrival arrival{index, edges_.back(), view};
  StepRecord step;
  step.index = index;
  step.vertex = vertex;
  step.f_x = arrival.weight_to(Side::X);
  step.f_y = arrival.weight_to(Side::Y);
  const std::size_t before = advice_consumed();
  const Side side = policy_->place(arrival, reader_ ? &*reader_ : nullptr);
  if (side != Side::X && side != Side::Y) {
    throw ContractViolation("algorithm " + name_ + " returned no side for arrival " +
                            std::to_string(index));
  }
  step.side = side;
  step.bits_read = advice_consumed() - before;
  sides_.push_back(side);
  steps_.push_back(step);
  return side;
}

std::vector<BackEdge> back_edges_of(const Graph& g, const ArrivalOrder& order,
                                    std::span<const std::size_t> positions, std::size_t index) {
  std::vector<BackEdge> out;
  for (const Neighbor& nb : g.neighbors(order[index])) {
    const std::size_t pos = positions[nb.vertex];
    if (pos < index) out.push_back({pos, nb.w});
  }
  std::sort(out.begin(), out.end(),
            [](const BackEdge& a, const BackEdge& b) { return a.arrival < b.arrival; });
  return out;
}

RunRecord finish_run(const Graph& g, const ArrivalOrder& order, const OnlineSession& session) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n || session.revealed() != n) {
    throw std::invalid_argument("session did not reveal every vertex of the graph");
  }
  CutAssignment assignment(n);
  for (std::size_t i = 0; i < n; ++i) assignment.assign(order[i], session.sides()[i]);
  RunRecord record;
  if (n >= 2 && !assignment.is_valid_cut()) {
    throw ContractViolation("algorithm " + session.algorithm_name() +
                            " left one side of the cut empty");
  }
  if (n >= 1 && assignment.side(order[0]) == Side::Y) {
    assignment = assignment.swapped();
    record.labels_swapped = true;
  }
  record.value = cut_weight(g, assignment);
  record.assignment = std::move(assignment);
  record.advice_bits = session.advice_consumed();
  record.steps.assign(session.steps().begin(), session.steps().end());
  for (std::size_t i = 0; i < n; ++i) record.steps[i].vertex = order[i];
  return record;
}

RunRecord run(const Graph& g, const ArrivalOrder& order, const OnlineCutAlgorithm& algorithm,
              std::optional<AdviceTape> tape) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  if (order.size() != n) throw std::invalid_argument("order is not a permutation of the graph");
  OnlineSession session(algorithm, std::move(tape));
  const std::vector<std::size_t> positions = order.positions();
  for (std::size_t i = 0; i < n; ++i) {
    session.reveal(back_edges_of(g, order, positions, i), order[i]);
  }
  return finish_run(g, order, session);
}

double run_value(const Graph& g, const ArrivalOrder& order, const OnlineCutAlgorithm& algorithm,
                 const TapeSource& tapes) {
  std::optional<AdviceTape> tape;
  if (algorithm.uses_advice()) {
    if (!tapes) throw std::invalid_argument("advice algorithm needs a tape source");
    tape = tapes(g, order);
  }
  const RunRecord record = run(g, order, algorithm, std::move(tape));
  return record.value.is_infinite() ? std::numeric_limits<double>::infinity()
                                    : record.value.value();
}

void for_each_order(std::size_t n, const std::function<bool(const ArrivalOrder&)>& visit) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  do {
    if (!visit(ArrivalOrder(perm))) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

const char* to_string(OrderSearch::Mode mode) {
  return mode == OrderSearch::Mode::Exhaustive ? "exhaustive" : "sampled";
}

namespace {

void check_order_cap(std::size_t n, std::size_t cap) {
  cap = std::min(cap, kOrderEnumerationCap);
  if (n > cap) {
    throw CapacityError("order enumeration over n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
}

template <typename Better>
OrderExtreme order_extreme(const Graph& g, const OnlineCutAlgorithm& algorithm,
                           const OrderSearch& search, const TapeSource& tapes, Better better) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  OrderExtreme out;
  out.mode = search.mode;
  bool have = false;
  auto consider = [&](const ArrivalOrder& order) {
    const double v = run_value(g, order, algorithm, tapes);
    ++out.runs;
    if (!have || better(v, out.value)) {
      have = true;
      out.value = v;
      out.witness = order;
    }
  };
  if (search.mode == OrderSearch::Mode::Exhaustive) {
    check_order_cap(n, search.cap);
    for_each_order(n, [&](const ArrivalOrder& order) {
      consider(order);
      return true;
    });
  } else {
    if (search.samples == 0) throw std::invalid_argument("sampled search needs samples > 0");
    for (std::size_t i = 0; i < search.samples; ++i) {
      Rng rng = make_rng(search.seed, "order-search", i);
      consider(ArrivalOrder(random_permutation(n, rng)));
    }
  }
  return out;
}

}  // namespace

OrderExtreme worst_case_value(const Graph& g, const OnlineCutAlgorithm& algorithm,
                              const OrderSearch& search, const TapeSource& tapes) {
  return order_extreme(g, algorithm, search, tapes, [](double a, double b) { return a > b; });
}

OrderExtreme best_case_value(const Graph& g, const OnlineCutAlgorithm& algorithm,
                             const OrderSearch& search, const TapeSource& tapes) {
  return order_extreme(g, algorithm, search, tapes, [](double a, double b) { return a < b; });
}

Expectation expected_value_random_order(const Graph& g, const OnlineCutAlgorithm& algorithm,
                                        const ExpectationMode& mode, const TapeSource& tapes) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  Expectation out;
  out.exact = mode.exact;
  if (mode.exact) {
    check_order_cap(n, mode.cap);
    // Kahan summation keeps the exact-mode mean independent of n! rounding drift.
    double sum = 0.0, comp = 0.0;
    for_each_order(n, [&](const ArrivalOrder& order) {
      const double y = run_value(g, order, algorithm, tapes) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      ++out.runs;
      return true;
    });
    out.mean = sum / static_cast<double>(out.runs);
    return out;
  }
  if (mode.samples == 0) throw std::invalid_argument("Monte-Carlo mode needs samples > 0");
  std::vector<double> values(mode.samples);
  parallel_for(mode.samples, mode.threads, [&](std::size_t i) {
    Rng rng = make_rng(mode.seed, "random-order", i);
    values[i] = run_value(g, ArrivalOrder(random_permutation(n, rng)), algorithm, tapes);
  });
  double sum = 0.0;
  for (double v : values) sum += v;
  out.runs = values.size();
  out.mean = sum / static_cast<double>(out.runs);
  if (out.runs > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std_error = std::sqrt(ss / static_cast<double>(out.runs - 1) /
                              static_cast<double>(out.runs));
  }
  return out;
}

}  // namespace onlinecut
