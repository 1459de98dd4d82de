#pragma once

// Depth-first enumeration of edge colorings with per-vertex pruning.
//
// Edges in the Eulerian subset take colors in [0, 2l) (the phi coloring),
// the remaining edges take colors in [0, k) (the psi coloring). A vertex
// factor is evaluated as soon as its last incident edge is colored, and a
// zero factor cuts the whole subtree.

#include <cstdint>
#include <vector>

#include "mixedpf/graph.hpp"
#include "mixedpf/models.hpp"

namespace mixedpf::detail {

class ColoringKernel {
 public:
  /// `has_factor[v]` marks the vertices that carry a copy of h; labeled
  /// vertices of a fragment do not.
  ColoringKernel(const MultiGraph& graph, const std::vector<bool>& has_factor, const EulerianState& state,
                 const EdgeColoringModel& model);

  /// True when no coloring can contribute (an empty color range or a factor
  /// that is identically zero).
  bool trivially_zero() const { return zero_; }
  int edge_count() const { return static_cast<int>(order_.size()); }

  /// Number of prefix tasks when the first `depth` edges (in kernel order)
  /// are fixed.
  std::uint64_t prefix_count(int depth) const;
  /// Smallest depth giving at least `min_tasks` prefixes (or all edges).
  int split_depth(std::uint64_t min_tasks) const;

  /// Calls leaf(colors, product) for every coloring extending prefix number
  /// `prefix` at `depth` whose vertex product is nonzero. `colors` is indexed
  /// by edge id. Returns the number of leaves visited.
  template <class Leaf>
  std::uint64_t run(int depth, std::uint64_t prefix, Leaf&& leaf) const {
    if (zero_) return 0;
    Scratch s(*this);
    // Decode the prefix (most significant = first edge in order).
    for (int d = depth - 1; d >= 0; --d) {
      const int e = order_[d];
      s.colors[e] = static_cast<int>(prefix % static_cast<std::uint64_t>(domain_[e]));
      prefix /= static_cast<std::uint64_t>(domain_[e]);
    }
    s.product[0] = base_;
    for (int d = 0; d < depth; ++d) {
      s.product[d + 1] = s.product[d];
      if (!apply_completions(d, s)) return 0;
    }
    std::uint64_t leaves = 0;
    descend(depth, s, leaf, leaves);
    return leaves;
  }

  template <class Leaf>
  std::uint64_t run_all(Leaf&& leaf) const {
    return run(0, 0, leaf);
  }

 private:
  struct VertexPlan {
    std::vector<int> sym_edges;                  // psi-colored edge ids, loops twice
    std::vector<std::pair<int, int>> ext_pairs;  // (in edge, out edge) per pairing
  };
  struct Scratch {
    explicit Scratch(const ColoringKernel& k)
        : colors(k.domain_.size(), 0), product(k.order_.size() + 1) {}
    std::vector<int> colors;
    std::vector<GaussianRational> product;
  };

  /// Multiplies s.product[d + 1] by the factors completing at depth d.
  bool apply_completions(int d, Scratch& s) const {
    for (int v : completes_at_[d]) {
      const VertexPlan& plan = plans_[v];
      std::uint64_t key = 0;
      for (int e : plan.sym_edges) key += model_->sym_weight(s.colors[e]);
      std::uint32_t mask = 0;
      bool negative = false;
      for (auto [in, out] : plan.ext_pairs) {
        if (!wedge_push(mask, negative, s.colors[in])) return false;
        const int c = s.colors[out];
        negative ^= dual_negative_[c];
        if (!wedge_push(mask, negative, dual_index_[c])) return false;
      }
      const GaussianRational* value = model_->find(key, mask);
      if (value == nullptr) return false;
      s.product[d + 1] *= *value;
      s.product[d + 1].negate_if(negative);
    }
    return true;
  }

  template <class Leaf>
  void descend(int d, Scratch& s, Leaf& leaf, std::uint64_t& leaves) const {
    if (d == static_cast<int>(order_.size())) {
      ++leaves;
      leaf(s.colors, s.product[d]);
      return;
    }
    const int e = order_[d];
    for (int c = 0; c < domain_[e]; ++c) {
      s.colors[e] = c;
      s.product[d + 1] = s.product[d];
      if (apply_completions(d, s)) descend(d + 1, s, leaf, leaves);
    }
  }

  const EdgeColoringModel* model_;
  std::vector<int> order_;                    // edge ids in enumeration order
  std::vector<int> domain_;                   // per edge id
  std::vector<VertexPlan> plans_;             // per vertex
  std::vector<std::vector<int>> completes_at_;  // per depth
  std::vector<int> dual_index_;
  std::vector<bool> dual_negative_;
  GaussianRational base_ = 1;
  bool zero_ = false;
};

}  // namespace mixedpf::detail
