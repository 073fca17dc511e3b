#pragma once

// Online min cut with an advice tape: the n-1 bit optimal scheme, the
// min-degree pointer scheme, and fooling-pair search for lower bounds.

#include <cstdint>
#include <optional>
#include <vector>

#include "onlinecut/advice_tape.hpp"
#include "onlinecut/engine.hpp"
#include "onlinecut/graph.hpp"

namespace onlinecut {

/// An advice-consuming algorithm together with the oracle that writes its
/// tapes.
struct AdviceScheme {
  AlgorithmPtr algorithm;
  TapeSource tapes;
};

/// True iff (X + candidate, Y) over the assigned vertices of `partial`
/// extends to a minimum cut of g. Enumerates the completions.
bool extendability_oracle(const Graph& g, const CutAssignment& partial, VertexId candidate,
                          Side side = Side::X);

/// v_1 to X, then one bit per arrival: 1 puts it on X, 0 on Y.
AlgorithmPtr advice_optimal();

/// The extendability answers along the run of advice_optimal; n-1 bits.
AdviceTape tape_for_optimal(const Graph& g, const ArrivalOrder& order);

AdviceScheme optimal_advice_scheme();

/// advice_optimal restricted to a b-bit tape: once the bits run out it puts
/// a vertex on Y while Y is empty and otherwise follows greedy_min.
AlgorithmPtr truncated_advice_optimal(std::size_t b);

/// truncated_advice_optimal(b) fed the first b bits of tape_for_optimal.
AdviceScheme truncated_optimal_scheme(std::size_t b);

/// Reads a ceil(log2 n)-bit arrival index i at the first arrival and cuts
/// the i-th arriving vertex away from all others.
AlgorithmPtr min_degree_advice();

/// Arrival index of the smallest-id vertex of minimum weighted degree,
/// encoded in ceil(log2 n) bits.
AdviceTape min_degree_tape(const Graph& g, const ArrivalOrder& order);

/// Decodes a min-degree tape for an n-vertex run; throws std::out_of_range
/// when the index is not an arrival position.
std::size_t decode_min_degree_tape(const AdviceTape& tape, std::size_t n);

AdviceScheme min_degree_scheme();

/// Instances sharing one arrival order whose first arrivals (the prefix)
/// form the same independent set in every instance.
struct InstanceFamily {
  std::vector<Graph> instances;
  std::vector<VertexId> prefix;
  ArrivalOrder order;
};

struct FoolingPair {
  std::size_t first = 0;   // instance indices into the family
  std::size_t second = 0;
  std::uint64_t first_class = 0;   // restricted optimum on the prefix
  std::uint64_t second_class = 0;
  AdviceTape shared_tape;  // the (truncated) tape both instances receive
  double first_value = 0.0;
  double second_value = 0.0;
  double first_opt = 0.0;
  double second_opt = 0.0;
  std::size_t fooled = 0;      // an instance whose run is not optimal
  double forced_value = 0.0;   // that run's cut value
  std::size_t distinct_classes = 0;
};

/// Looks for two instances with different restricted optima that receive
/// the same b-bit tape. Returns nothing when the family has at most 2^b
/// restricted optima. Each instance's tape is the scheme's tape cut to b
/// bits. Throws ContractViolation if such a pair is found but both runs are
/// optimal, which would mean the algorithm saw more than the prefix.
std::optional<FoolingPair> fooling_pair_search(const AdviceScheme& scheme,
                                               const InstanceFamily& family, std::size_t b);

}  // namespace onlinecut
