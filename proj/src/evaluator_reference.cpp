#include <stdexcept>

#include "mixedpf/evaluator.hpp"

namespace mixedpf::reference {

namespace {

GaussianRational sum_colorings(const MultiGraph& graph, EdgeSet subset, const EdgeColoringModel& h,
                               const EulerianState& state, std::uint64_t& colorings) {
  const int m = graph.edge_count();
  const int n = graph.vertex_count();
  std::vector<int> radix(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    radix[e] = subset.contains(e) ? h.two_ell() : h.k();
    if (radix[e] == 0) return {};
  }

  GaussianRational sum;
  std::vector<int> color(static_cast<std::size_t>(m), 0);
  while (true) {
    ++colorings;
    GaussianRational product = 1;
    for (int v = 0; v < n; ++v) {
      LocalEvaluationRequest request;
      for (int e = 0; e < m; ++e) {
        if (subset.contains(e)) continue;
        const Edge& ed = graph.edge(e);
        if (ed.a == v) request.sym_colors.push_back(color[e]);
        if (ed.b == v) request.sym_colors.push_back(color[e]);
      }
      for (const Pairing& p : state.pairing[v]) {
        request.ext.push_back({color[p.in.edge], false});
        request.ext.push_back({color[p.out.edge], true});
      }
      product *= evaluate_local(h, request);
    }
    sum += product;

    int e = 0;
    while (e < m && ++color[e] == radix[e]) color[e++] = 0;
    if (e == m) break;
  }
  return sum;
}

}  // namespace

GaussianRational s_h(const MultiGraph& graph, EdgeSet subset, const EdgeColoringModel& h,
                     const EulerianState& state) {
  if (state.subset != subset) throw std::domain_error("s_h: state belongs to a different subset");
  validate_state(Fragment(graph, {}), state);
  std::uint64_t colorings = 0;
  GaussianRational sum = sum_colorings(graph, subset, h, state, colorings);
  sum.negate_if(decompose(state, graph).circuits % 2 != 0);
  return sum;
}

EvaluationResult partition_function(const MultiGraph& graph, const EdgeColoringModel& h, Mode mode) {
  check_mode(h, mode);
  const int m = graph.edge_count();
  if (m > 30) throw std::domain_error("reference::partition_function: too many edges for subset filtering");
  const Fragment as_fragment(graph, {});

  EvaluationResult out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    EdgeSet subset(bits);
    if (mode == Mode::kOrdinary && !subset.empty()) continue;
    if (mode == Mode::kSkew && subset != EdgeSet::all(m)) continue;
    if (!is_eulerian_subset(as_fragment, subset)) continue;
    ++out.counters.eulerian_subsets;
    const EulerianState state = eulerian_state(graph, subset, 0);
    GaussianRational sum = sum_colorings(graph, subset, h, state, out.counters.colorings);
    sum.negate_if(decompose(state, graph).circuits % 2 != 0);
    out.value += sum;
  }
  for (int c = 0; c < graph.circle_count(); ++c) out.value *= circle_value(h, mode);
  return out;
}

}  // namespace mixedpf::reference
