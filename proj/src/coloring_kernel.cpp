#include "coloring_kernel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mixedpf::detail {

ColoringKernel::ColoringKernel(const MultiGraph& graph, const std::vector<bool>& has_factor,
                               const EulerianState& state, const EdgeColoringModel& model)
    : model_(&model) {
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  const int k = model.k();
  const int two_ell = model.two_ell();

  domain_.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    domain_[e] = state.subset.contains(e) ? two_ell : k;
    if (domain_[e] == 0) zero_ = true;
  }
  for (int c = 0; c < two_ell; ++c) {
    SignedIndex g = dual_basis(c, model.ell());
    dual_index_.push_back(g.index);
    dual_negative_.push_back(g.sign < 0);
  }

  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (int e = 0; e < m; ++e) {
    incident[graph.edge(e).a].push_back(e);
    if (!graph.edge(e).is_loop()) incident[graph.edge(e).b].push_back(e);
  }

  plans_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (!has_factor[v]) continue;
    VertexPlan& plan = plans_[v];
    for (int e : incident[v]) {
      if (state.subset.contains(e)) continue;
      plan.sym_edges.push_back(e);
      if (graph.edge(e).is_loop()) plan.sym_edges.push_back(e);
    }
    for (const Pairing& p : state.pairing[v]) plan.ext_pairs.emplace_back(p.in.edge, p.out.edge);
    if (static_cast<int>(plan.sym_edges.size()) > model.sym_cap() && k > 0) {
      throw std::domain_error("model is materialized up to symmetric degree " + std::to_string(model.sym_cap()) +
                              " but vertex " + std::to_string(v) + " needs " +
                              std::to_string(plan.sym_edges.size()));
    }
    // More than 2l wedge factors always vanish.
    if (2 * static_cast<int>(plan.ext_pairs.size()) > two_ell) zero_ = true;
  }
  if (zero_) return;

  // BFS vertex order keeps each vertex's incident edges close together.
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int root = 0; root < n; ++root) {
    if (pos[root] >= 0) continue;
    std::queue<int> q;
    q.push(root);
    pos[root] = next++;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : incident[v]) {
        int w = graph.edge(e).a == v ? graph.edge(e).b : graph.edge(e).a;
        if (pos[w] < 0) {
          pos[w] = next++;
          q.push(w);
        }
      }
    }
  }
  order_.resize(static_cast<std::size_t>(m));
  std::iota(order_.begin(), order_.end(), 0);
  auto rank = [&](int e) {
    int pa = pos[graph.edge(e).a];
    int pb = pos[graph.edge(e).b];
    return std::make_tuple(std::max(pa, pb), std::min(pa, pb), e);
  };
  std::sort(order_.begin(), order_.end(), [&](int x, int y) { return rank(x) < rank(y); });
  std::vector<int> depth_of(static_cast<std::size_t>(m));
  for (int d = 0; d < m; ++d) depth_of[order_[d]] = d;

  completes_at_.assign(static_cast<std::size_t>(m), {});
  for (int v = 0; v < n; ++v) {
    if (!has_factor[v]) continue;
    if (incident[v].empty()) {
      const GaussianRational* value = model.find(0, 0);
      if (value == nullptr) {
        zero_ = true;
        return;
      }
      base_ *= *value;
      continue;
    }
    int last = 0;
    for (int e : incident[v]) last = std::max(last, depth_of[e]);
    completes_at_[last].push_back(v);
  }
}

std::uint64_t ColoringKernel::prefix_count(int depth) const {
  std::uint64_t count = 1;
  for (int d = 0; d < depth; ++d) {
    const auto dom = static_cast<std::uint64_t>(domain_[order_[d]]);
    if (count > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(dom, 1)) {
      throw std::overflow_error("prefix count overflow");
    }
    count *= dom;
  }
  return count;
}

int ColoringKernel::split_depth(std::uint64_t min_tasks) const {
  int depth = 0;
  std::uint64_t count = 1;
  while (depth < static_cast<int>(order_.size()) && count < min_tasks) {
    count *= static_cast<std::uint64_t>(domain_[order_[depth]]);
    ++depth;
  }
  return depth;
}

}  // namespace mixedpf::detail
