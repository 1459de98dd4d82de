#pragma once

#include <cstdint>
#include <string_view>

#include "mixedpf/graph.hpp"
#include "mixedpf/models.hpp"

namespace mixedpf {

enum class Mode { kOrdinary, kSkew, kMixed };

std::string_view to_string(Mode mode);
/// Accepts "ordinary", "skew" and "mixed"; throws std::invalid_argument.
Mode parse_mode(std::string_view text);

struct EvaluationCounters {
  std::uint64_t eulerian_subsets = 0;
  std::uint64_t colorings = 0;
};

struct EvaluationResult {
  GaussianRational value;
  EvaluationCounters counters;
};

/// Throws std::domain_error unless the model fits the mode (ordinary needs
/// 2l = 0, skew needs k = 0).
void check_mode(const EdgeColoringModel& h, Mode mode);

/// Value of one vertexless circle: k, -2l or k - 2l.
GaussianRational circle_value(const EdgeColoringModel& h, Mode mode);

/// (-1)^{c(kappa)} times the sum over phi: F -> [2l], psi: E \ F -> [k] of
/// the vertex product. Circle components of `graph` are ignored.
/// Throws std::domain_error if `state` is not a valid state for `subset`.
GaussianRational s_h(const MultiGraph& graph, EdgeSet subset, const EdgeColoringModel& h, const EulerianState& state);

/// Ordinary, skew or mixed partition function of `graph`, including the
/// circle factors. Work is split across OpenMP threads over Eulerian subsets
/// and coloring prefixes; the exact sum does not depend on the split.
EvaluationResult partition_function(const MultiGraph& graph, const EdgeColoringModel& h, Mode mode);

/// True iff s_h(graph, subset) agrees across the states of seeds 0..trials-1.
bool invariance_check(const MultiGraph& graph, EdgeSet subset, const EdgeColoringModel& h, int trials);

namespace reference {

/// Literal serial evaluation: every Eulerian subset found by filtering all
/// 2^|E| subsets, every coloring visited by a mixed-radix counter, every
/// vertex factor computed through evaluate_local. Kept for cross-checking
/// and benchmarking the parallel kernel.
GaussianRational s_h(const MultiGraph& graph, EdgeSet subset, const EdgeColoringModel& h, const EulerianState& state);
EvaluationResult partition_function(const MultiGraph& graph, const EdgeColoringModel& h, Mode mode);

}  // namespace reference

}  // namespace mixedpf
