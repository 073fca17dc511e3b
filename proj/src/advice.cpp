#include "onlinecut/advice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "onlinecut/errors.hpp"
#include "onlinecut/oracles.hpp"

namespace onlinecut {
namespace {

double opt_slack(const Graph& g) { return g.tolerance() * std::max(1.0, g.total_weight()); }

bool extendable(const Graph& g, const CutAssignment& partial, VertexId candidate, Side side,
                double opt) {
  const std::size_t n = g.vertex_count();
  if (partial.size() != n) throw std::invalid_argument("partial assignment size mismatch");
  if (candidate >= n || partial.side(candidate) != Side::Unassigned) {
    throw std::invalid_argument("candidate must be an unassigned vertex");
  }
  if (side != Side::X && side != Side::Y) throw std::invalid_argument("candidate side must be X or Y");
  std::uint64_t base = 0;
  bool has_y = side == Side::Y;
  std::vector<VertexId> free;
  for (VertexId v = 0; v < n; ++v) {
    const Side s = v == candidate ? side : partial.side(v);
    if (s == Side::X) base |= std::uint64_t{1} << v;
    if (s == Side::Y) has_y = true;
    if (s == Side::Unassigned) free.push_back(v);
  }
  if (free.size() > kEnumerationCap) {
    throw CapacityError("extendability oracle: " + std::to_string(free.size()) +
                        " unassigned vertices exceed the enumeration cap");
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  const double limit = opt + opt_slack(g);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << free.size()); ++c) {
    std::uint64_t x = base;
    for (std::size_t j = 0; j < free.size(); ++j) {
      if ((c >> j) & 1U) x |= std::uint64_t{1} << free[j];
    }
    const bool y_nonempty = has_y || x != all;
    if (x == 0 || !y_nonempty) continue;
    if (cut_weight_mask(g, x) <= limit) return true;
  }
  return false;
}

class OptimalPolicy final : public CutPolicy {
 public:
  Side place(const Arrival& a, AdviceReader* advice) override {
    if (a.index == 0) return Side::X;
    return advice->read_bit() ? Side::X : Side::Y;
  }
};

class OptimalAlgorithm final : public OnlineCutAlgorithm {
 public:
  std::string name() const override { return "advice-optimal"; }
  bool uses_advice() const override { return true; }
  std::unique_ptr<CutPolicy> start() const override { return std::make_unique<OptimalPolicy>(); }
};

class TruncatedPolicy final : public CutPolicy {
 public:
  Side place(const Arrival& a, AdviceReader* advice) override {
    Side side;
    if (a.index == 0) {
      side = Side::X;
    } else if (advice->remaining() > 0) {
      side = advice->read_bit() ? Side::X : Side::Y;
    } else if (!has_y_) {
      side = Side::Y;
    } else {
      const double fx = a.weight_to(Side::X);
      const double fy = a.weight_to(Side::Y);
      if (fx > fy + 1e-9) {
        side = Side::X;
      } else if (fy > fx + 1e-9) {
        side = Side::Y;
      } else {
        side = previous_;
      }
    }
    previous_ = side;
    has_y_ = has_y_ || side == Side::Y;
    return side;
  }

 private:
  Side previous_ = Side::X;
  bool has_y_ = false;
};

class TruncatedAlgorithm final : public OnlineCutAlgorithm {
 public:
  explicit TruncatedAlgorithm(std::size_t b) : b_(b) {}
  std::string name() const override { return "advice-optimal/b=" + std::to_string(b_); }
  bool uses_advice() const override { return true; }
  std::unique_ptr<CutPolicy> start() const override { return std::make_unique<TruncatedPolicy>(); }

 private:
  std::size_t b_;
};

class MinDegreePolicy final : public CutPolicy {
 public:
  Side place(const Arrival& a, AdviceReader* advice) override {
    if (a.index == 0) {
      target_ = advice->read_index(advice->length());
      return Side::X;
    }
    if (target_ == 0) return Side::Y;
    return a.index == target_ ? Side::Y : Side::X;
  }

 private:
  std::size_t target_ = 0;
};

class MinDegreeAlgorithm final : public OnlineCutAlgorithm {
 public:
  std::string name() const override { return "min-degree-advice"; }
  bool uses_advice() const override { return true; }
  std::unique_ptr<CutPolicy> start() const override { return std::make_unique<MinDegreePolicy>(); }
};

}  // namespace

bool extendability_oracle(const Graph& g, const CutAssignment& partial, VertexId candidate,
                          Side side) {
  if (g.vertex_count() < 2) throw std::invalid_argument("extendability needs at least 2 vertices");
  return extendable(g, partial, candidate, side, brute_force_mincut(g).value.value());
}

AlgorithmPtr advice_optimal() { return std::make_shared<OptimalAlgorithm>(); }

AdviceTape tape_for_optimal(const Graph& g, const ArrivalOrder& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("order does not match the graph");
  if (n < 2) return AdviceTape();
  const double opt = brute_force_mincut(g).value.value();
  CutAssignment partial(n);
  partial.assign(order[0], Side::X);
  std::vector<bool> bits;
  bits.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const bool yes = extendable(g, partial, order[i], Side::X, opt);
    bits.push_back(yes);
    partial.assign(order[i], yes ? Side::X : Side::Y);
  }
  return AdviceTape(std::move(bits));
}

AdviceScheme optimal_advice_scheme() { return {advice_optimal(), tape_for_optimal}; }

AlgorithmPtr truncated_advice_optimal(std::size_t b) {
  return std::make_shared<TruncatedAlgorithm>(b);
}

AdviceScheme truncated_optimal_scheme(std::size_t b) {
  return {truncated_advice_optimal(b), [b](const Graph& g, const ArrivalOrder& order) {
            return tape_for_optimal(g, order).prefix(b);
          }};
}

AlgorithmPtr min_degree_advice() { return std::make_shared<MinDegreeAlgorithm>(); }

AdviceTape min_degree_tape(const Graph& g, const ArrivalOrder& order) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || order.size() != n) throw std::invalid_argument("order does not match the graph");
  const DegreeStats stats = degree_stats(g);
  VertexId best = 0;
  for (VertexId v = 1; v < n; ++v) {
    if (stats.degrees[v] < stats.degrees[best]) best = v;
  }
  return AdviceTape::encode_index(order.positions()[best], ceil_log2(n));
}

std::size_t decode_min_degree_tape(const AdviceTape& tape, std::size_t n) {
  if (tape.length() != ceil_log2(n)) {
    throw std::out_of_range("min-degree tape must hold ceil(log2 n) bits");
  }
  AdviceReader reader(tape);
  const std::size_t index = reader.read_index(tape.length());
  if (index >= n) {
    throw std::out_of_range("encoded arrival index " + std::to_string(index) +
                            " is out of range for n=" + std::to_string(n));
  }
  return index;
}

AdviceScheme min_degree_scheme() { return {min_degree_advice(), min_degree_tape}; }

std::optional<FoolingPair> fooling_pair_search(const AdviceScheme& scheme,
                                               const InstanceFamily& family, std::size_t b) {
  if (family.instances.empty()) return std::nullopt;
  const std::size_t n = family.order.size();
  if (family.prefix.empty() || family.prefix.size() > n) {
    throw std::invalid_argument("family prefix must be a nonempty part of the order");
  }
  for (std::size_t j = 0; j < family.prefix.size(); ++j) {
    if (family.order[j] != family.prefix[j]) {
      throw std::invalid_argument("family order must reveal the prefix first");
    }
  }
  for (const Graph& g : family.instances) {
    if (g.vertex_count() != n) throw std::invalid_argument("family instances differ in size");
    for (std::size_t a = 0; a < family.prefix.size(); ++a) {
      for (std::size_t c = a + 1; c < family.prefix.size(); ++c) {
        if (g.weight(family.prefix[a], family.prefix[c]) != 0.0) {
          throw std::invalid_argument("family prefix must be an independent set");
        }
      }
    }
  }

  const std::size_t count = family.instances.size();
  std::vector<std::uint64_t> classes(count);
  std::vector<AdviceTape> tapes(count);
  std::map<std::string, std::vector<std::size_t>> by_tape;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph& g = family.instances[i];
    classes[i] = restricted_optimum_class(g, family.prefix);
    tapes[i] = scheme.tapes(g, family.order).prefix(b);
    by_tape[tapes[i].to_bitstring()].push_back(i);
  }
  const std::size_t distinct = std::set<std::uint64_t>(classes.begin(), classes.end()).size();
  if (b < 64 && distinct <= (std::uint64_t{1} << b)) return std::nullopt;
  if (b >= 64) return std::nullopt;

  for (const auto& [key, members] : by_tape) {
    const std::size_t first = members.front();
    const auto other = std::find_if(members.begin(), members.end(),
                                    [&](std::size_t i) { return classes[i] != classes[first]; });
    if (other == members.end()) continue;
    FoolingPair pair;
    pair.first = first;
    pair.second = *other;
    pair.first_class = classes[first];
    pair.second_class = classes[*other];
    pair.shared_tape = tapes[first];
    pair.distinct_classes = distinct;
    const Graph& g1 = family.instances[first];
    const Graph& g2 = family.instances[*other];
    pair.first_value = run(g1, family.order, *scheme.algorithm, tapes[first]).value.value();
    pair.second_value = run(g2, family.order, *scheme.algorithm, tapes[*other]).value.value();
    pair.first_opt = brute_force_mincut(g1).value.value();
    pair.second_opt = brute_force_mincut(g2).value.value();
    if (pair.first_value > pair.first_opt + opt_slack(g1)) {
      pair.fooled = first;
      pair.forced_value = pair.first_value;
    } else if (pair.second_value > pair.second_opt + opt_slack(g2)) {
      pair.fooled = *other;
      pair.forced_value = pair.second_value;
    } else {
      throw ContractViolation("both instances of a fooling pair were solved optimally");
    }
    return pair;
  }
  throw ContractViolation("more restricted optima than tapes but no shared tape found");
}

}  // namespace onlinecut
