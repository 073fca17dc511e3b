#include "onlinecut/algorithms.hpp"

#include <cmath>
#include <stdexcept>

namespace onlinecut {
namespace {

class FixedPolicy final : public CutPolicy {
 public:
  FixedPolicy(Side first, Side rest) : first_(first), rest_(rest) {}
  Side place(const Arrival& a, AdviceReader*) override { return a.index == 0 ? first_ : rest_; }

 private:
  Side first_, rest_;
};

class FixedAlgorithm final : public OnlineCutAlgorithm {
 public:
  FixedAlgorithm(std::string name, Side first, Side rest)
      : name_(std::move(name)), first_(first), rest_(rest) {}
  std::string name() const override { return name_; }
  std::unique_ptr<CutPolicy> start() const override {
    return std::make_unique<FixedPolicy>(first_, rest_);
  }

 private:
  std::string name_;
  Side first_, rest_;
};

// Rule (R) and its max-cut mirror. `attract` is the side that wins when it
// has strictly more weight to v_i: X for min cut, the other side for max cut.
class GreedyPolicy final : public CutPolicy {
 public:
  GreedyPolicy(bool maximize, TieRule tie) : maximize_(maximize), tie_(tie) {}

  Side place(const Arrival& a, AdviceReader*) override {
    Side side;
    if (a.index == 0) {
      side = Side::X;
    } else if (a.index == 1) {
      side = Side::Y;
    } else {
      const double fx = a.weight_to(Side::X);
      const double fy = a.weight_to(Side::Y);
      if (std::abs(fx - fy) <= kTieTolerance) {
        side = tie_ == TieRule::PreviousVertex ? previous_ : (x_count_ == 1 ? Side::Y : Side::X);
      } else if ((fx > fy) != maximize_) {
        side = Side::X;
      } else {
        side = Side::Y;
      }
    }
    previous_ = side;
    if (side == Side::X) ++x_count_;
    return side;
  }

 private:
  bool maximize_;
  TieRule tie_;
  Side previous_ = Side::Unassigned;
  std::size_t x_count_ = 0;
};

class GreedyAlgorithm final : public OnlineCutAlgorithm {
 public:
  GreedyAlgorithm(bool maximize, TieRule tie) : maximize_(maximize), tie_(tie) {}
  std::string name() const override {
    std::string n = maximize_ ? "greedy-max" : "greedy-min";
    if (tie_ == TieRule::SideCount) n += "/side-count";
    return n;
  }
  std::unique_ptr<CutPolicy> start() const override {
    return std::make_unique<GreedyPolicy>(maximize_, tie_);
  }

 private:
  bool maximize_;
  TieRule tie_;
};

template <typename Accept>
GreedySetResult greedy_scan(const SetFunction& f, std::span<const std::uint32_t> order,
                            Accept accept) {
  GreedySetResult out;
  std::uint32_t seen = 0;
  double current = f(0);
  for (std::uint32_t e : order) {
    if (e >= f.ground_size() || ((seen >> e) & 1U)) {
      throw std::invalid_argument("order must list distinct ground elements");
    }
    seen |= 1U << e;
    const double next = f(out.subset | (1U << e));
    GreedyStep step{e, next - current, accept(next, current)};
    if (step.accepted) {
      out.subset |= 1U << e;
      current = next;
    }
    out.steps.push_back(step);
  }
  out.value = current;
  return out;
}

}  // namespace

AlgorithmPtr trivial_first_vertex() {
  return std::make_shared<FixedAlgorithm>("trivial", Side::X, Side::Y);
}

AlgorithmPtr sparse_alg() { return std::make_shared<FixedAlgorithm>("sparse", Side::Y, Side::X); }

AlgorithmPtr greedy_min(TieRule tie) { return std::make_shared<GreedyAlgorithm>(false, tie); }

AlgorithmPtr greedy_max(TieRule tie) { return std::make_shared<GreedyAlgorithm>(true, tie); }

AlgorithmPtr make_algorithm(const std::string& key) {
  if (key == "trivial") return trivial_first_vertex();
  if (key == "sparse") return sparse_alg();
  if (key == "greedy-min") return greedy_min();
  if (key == "greedy-max") return greedy_max();
  if (key == "greedy-min/side-count") return greedy_min(TieRule::SideCount);
  if (key == "greedy-max/side-count") return greedy_max(TieRule::SideCount);
  throw std::invalid_argument("unknown algorithm '" + key +
                              "' (expected trivial, sparse, greedy-min or greedy-max)");
}

std::vector<std::string> algorithm_keys() { return {"trivial", "sparse", "greedy-min", "greedy-max"}; }

GreedySetResult greedy_submodular_max(const SetFunction& f, std::span<const std::uint32_t> order) {
  return greedy_scan(f, order, [](double next, double cur) { return next >= cur; });
}

GreedySetResult greedy_submodular_min_demo(const SetFunction& f,
                                           std::span<const std::uint32_t> order) {
  return greedy_scan(f, order, [](double next, double cur) { return next <= cur; });
}

}  // namespace onlinecut
