#include "mixedpf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace mixedpf {

EdgeSet EdgeSet::all(int edge_count) {
  if (edge_count > kMaxEdges) throw std::domain_error("EdgeSet: more than 64 edges");
  return EdgeSet(edge_count == kMaxEdges ? ~std::uint64_t{0} : (std::uint64_t{1} << edge_count) - 1);
}

std::vector<int> EdgeSet::to_vector() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

MultiGraph::MultiGraph(int n_vertices, std::vector<Edge> edges, int n_circles)
    : n_vertices_(n_vertices), edges_(std::move(edges)), n_circles_(n_circles) {
  if (n_vertices < 0 || n_circles < 0) throw std::domain_error("MultiGraph: negative size");
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.b < 0 || e.a >= n_vertices_ || e.b >= n_vertices_) {
      throw std::domain_error("MultiGraph: edge endpoint out of range");
    }
  }
}

int MultiGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= n_vertices_ || b >= n_vertices_) {
    throw std::domain_error("MultiGraph: edge endpoint out of range");
  }
  edges_.push_back({a, b});
  return edge_count() - 1;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.a == v) + (e.b == v);
  return d;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_vertices_), 0);
  for (const Edge& e : edges_) {
    ++d[static_cast<std::size_t>(e.a)];
    ++d[static_cast<std::size_t>(e.b)];
  }
  return d;
}

int MultiGraph::max_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int MultiGraph::degree_in(int v, EdgeSet subset) const {
  int d = 0;
  for (int e : subset.to_vector()) d += (edges_[e].a == v) + (edges_[e].b == v);
  return d;
}

bool MultiGraph::is_eulerian() const {
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

Fragment::Fragment(MultiGraph graph, std::vector<int> labeled)
    : graph_(std::move(graph)), labeled_(std::move(labeled)) {
  const int n = graph_.vertex_count();
  label_of_.assign(static_cast<std::size_t>(n), -1);
  open_end_.assign(labeled_.size(), -1);
  for (std::size_t i = 0; i < labeled_.size(); ++i) {
    int v = labeled_[i];
    if (v < 0 || v >= n) throw std::domain_error("Fragment: labeled vertex out of range");
    if (label_of_[v] >= 0) throw std::domain_error("Fragment: vertex " + std::to_string(v) + " labeled twice");
    label_of_[v] = static_cast<int>(i);
  }
  for (int e = 0; e < graph_.edge_count(); ++e) {
    const Edge& ed = graph_.edge(e);
    for (int v : {ed.a, ed.b}) {
      int label = label_of_[v];
      if (label < 0) continue;
      if (ed.is_loop()) throw std::domain_error("Fragment: labeled vertex " + std::to_string(v) + " carries a loop");
      if (open_end_[label] >= 0) {
        throw std::domain_error("Fragment: labeled vertex " + std::to_string(v) + " has degree > 1");
      }
      open_end_[label] = e;
    }
  }
  for (std::size_t i = 0; i < labeled_.size(); ++i) {
    if (open_end_[i] < 0) {
      throw std::domain_error("Fragment: labeled vertex " + std::to_string(labeled_[i]) + " has degree 0");
    }
  }
}

std::vector<int> Fragment::unlabeled_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    if (!is_labeled(v)) out.push_back(v);
  }
  return out;
}

bool is_eulerian_subset(const Fragment& fragment, EdgeSet subset) {
  const MultiGraph& g = fragment.graph();
  std::vector<int> parity(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e : subset.to_vector()) {
    if (e >= g.edge_count()) return false;
    parity[g.edge(e).a] ^= 1;
    parity[g.edge(e).b] ^= 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (parity[v] && !fragment.is_labeled(v)) return false;
  }
  return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;

int lowest_set(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w]) return static_cast<int>(w * 64) + std::countr_zero(b[w]);
  }
  return -1;
}

void xor_into(Bits& dst, const Bits& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

std::vector<EdgeSet> enumerate_eulerian_subsets(const Fragment& fragment) {
  const MultiGraph& g = fragment.graph();
  const int m = g.edge_count();
  if (m > EdgeSet::kMaxEdges) throw std::domain_error("enumerate_eulerian_subsets: more than 64 edges");
  const std::size_t words = static_cast<std::size_t>(g.vertex_count()) / 64 + 1;

  // Reduce each edge's boundary (restricted to unlabeled vertices) against a
  // pivot basis; every edge that reduces to zero closes a kernel vector.
  struct Row {
    Bits boundary;
    std::uint64_t combo;
  };
  std::vector<Row> basis;
  std::vector<int> pivot;
  std::vector<std::uint64_t> kernel;
  for (int e = 0; e < m; ++e) {
    Row r{Bits(words, 0), std::uint64_t{1} << e};
    const Edge& ed = g.edge(e);
    if (!ed.is_loop()) {
      for (int v : {ed.a, ed.b}) {
        if (!fragment.is_labeled(v)) r.boundary[v / 64] ^= std::uint64_t{1} << (v % 64);
      }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      int p = pivot[i];
      if ((r.boundary[p / 64] >> (p % 64)) & 1u) {
        xor_into(r.boundary, basis[i].boundary);
        r.combo ^= basis[i].combo;
      }
    }
    int p = lowest_set(r.boundary);
    if (p < 0) {
      kernel.push_back(r.combo);
    } else {
      // Keep the basis reduced so later rows can be reduced in one pass.
      for (auto& b : basis) {
        if ((b.boundary[p / 64] >> (p % 64)) & 1u) {
          xor_into(b.boundary, r.boundary);
          b.combo ^= r.combo;
        }
      }
      basis.push_back(std::move(r));
      pivot.push_back(p);
    }
  }
  if (kernel.size() > 40) throw std::domain_error("enumerate_eulerian_subsets: cycle space too large");

  std::vector<EdgeSet> out;
  out.reserve(std::size_t{1} << kernel.size());
  std::uint64_t current = 0;
  out.emplace_back(current);
  // Gray code walk over all combinations of the kernel basis.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << kernel.size()); ++i) {
    current ^= kernel[static_cast<std::size_t>(std::countr_zero(i))];
    out.emplace_back(current);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> enumerate_eulerian_subsets(const MultiGraph& graph) {
  return enumerate_eulerian_subsets(Fragment(graph, {}));
}

namespace {

std::size_t slot(HalfEdge h) { return static_cast<std::size_t>(h.edge) * 2 + static_cast<std::size_t>(h.side); }

}  // namespace

EulerianState eulerian_state(const Fragment& fragment, EdgeSet subset, unsigned seed) {
  if (!is_eulerian_subset(fragment, subset)) {
    throw std::domain_error("eulerian_state: subset is not Eulerian");
  }
  const MultiGraph& g = fragment.graph();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::mt19937 rng(seed);

  std::vector<std::vector<HalfEdge>> at(static_cast<std::size_t>(n));
  for (int e : subset.to_vector()) {
    at[g.edge(e).a].push_back({e, 0});
    at[g.edge(e).b].push_back({e, 1});
  }
  std::vector<HalfEdge> partner(static_cast<std::size_t>(2 * m));
  for (int v = 0; v < n; ++v) {
    if (fragment.is_labeled(v)) continue;
    auto& hs = at[v];
    if (seed != 0) std::shuffle(hs.begin(), hs.end(), rng);
    for (std::size_t i = 0; i + 1 < hs.size(); i += 2) {
      partner[slot(hs[i])] = hs[i + 1];
      partner[slot(hs[i + 1])] = hs[i];
    }
  }

  EulerianState state;
  state.subset = subset;
  state.reversed.assign(static_cast<std::size_t>(m), false);
  state.pairing.assign(static_cast<std::size_t>(n), {});
  std::vector<bool> visited(static_cast<std::size_t>(m), false);

  // Half-edges at which each traversed edge starts.
  auto walk = [&](HalfEdge start, bool closed) {
    std::vector<HalfEdge> tails;
    HalfEdge cur = start;
    while (true) {
      tails.push_back(cur);
      HalfEdge arrive = cur.other();
      if (fragment.is_labeled(endpoint(g, arrive))) break;
      HalfEdge next = partner[slot(arrive)];
      if (closed && next == start) break;
      cur = next;
    }
    return tails;
  };
  auto commit = [&](const std::vector<HalfEdge>& tails, bool closed) {
    for (std::size_t j = 0; j < tails.size(); ++j) {
      state.reversed[tails[j].edge] = tails[j].side == 1;
      visited[tails[j].edge] = true;
      if (j + 1 < tails.size()) {
        HalfEdge in = tails[j].other();
        state.pairing[endpoint(g, in)].push_back({in, tails[j + 1]});
      }
    }
    if (closed) {
      HalfEdge in = tails.back().other();
      state.pairing[endpoint(g, in)].push_back({in, tails.front()});
    }
  };

  for (int label = 0; label < fragment.t(); ++label) {
    int e = fragment.open_end(label);
    if (!subset.contains(e) || visited[e]) continue;
    int v = fragment.labeled()[label];
    HalfEdge start{e, g.edge(e).a == v ? 0 : 1};
    auto tails = walk(start, false);
    if (seed != 0 && (rng() & 1u)) tails = walk(tails.back().other(), false);
    commit(tails, false);
  }

  auto order = subset.to_vector();
  if (seed != 0) std::shuffle(order.begin(), order.end(), rng);
  for (int e : order) {
    if (visited[e]) continue;
    int side = seed != 0 ? static_cast<int>(rng() & 1u) : 0;
    commit(walk({e, side}, true), true);
  }
  return state;
}

EulerianState eulerian_state(const MultiGraph& graph, EdgeSet subset, unsigned seed) {
  return eulerian_state(Fragment(graph, {}), subset, seed);
}

void validate_state(const Fragment& fragment, const EulerianState& state) {
  const MultiGraph& g = fragment.graph();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (!is_eulerian_subset(fragment, state.subset)) throw std::domain_error("state: subset is not Eulerian");
  if (static_cast<int>(state.reversed.size()) != m || static_cast<int>(state.pairing.size()) != n) {
    throw std::domain_error("state: size mismatch with graph");
  }
  std::vector<int> used(static_cast<std::size_t>(2 * m), 0);
  for (int v = 0; v < n; ++v) {
    const auto& pairs = state.pairing[v];
    if (fragment.is_labeled(v) && !pairs.empty()) {
      throw std::domain_error("state: pairing at labeled vertex " + std::to_string(v));
    }
    for (const Pairing& p : pairs) {
      for (HalfEdge h : {p.in, p.out}) {
        if (h.edge < 0 || h.edge >= m || h.side < 0 || h.side > 1 || !state.subset.contains(h.edge) ||
            endpoint(g, h) != v) {
          throw std::domain_error("state: pairing at vertex " + std::to_string(v) + " uses a foreign half-edge");
        }
        ++used[slot(h)];
      }
      if (state.is_outgoing(p.in) || !state.is_outgoing(p.out)) {
        throw std::domain_error("state: pairing at vertex " + std::to_string(v) + " is not (incoming, outgoing)");
      }
    }
  }
  for (int e : state.subset.to_vector()) {
    for (int side = 0; side < 2; ++side) {
      HalfEdge h{e, side};
      int expected = fragment.is_labeled(endpoint(g, h)) ? 0 : 1;
      if (used[slot(h)] != expected) {
        throw std::domain_error("state: half-edge of edge " + std::to_string(e) + " paired " +
                                std::to_string(used[slot(h)]) + " times");
      }
    }
  }
}

Decomposition decompose(const EulerianState& state, const Fragment& fragment) {
  const MultiGraph& g = fragment.graph();
  const int m = g.edge_count();
  std::vector<HalfEdge> next_out(static_cast<std::size_t>(2 * m));
  for (const auto& pairs : state.pairing) {
    for (const Pairing& p : pairs) next_out[slot(p.in)] = p.out;
  }
  auto tail_half = [&](int e) { return HalfEdge{e, state.tail_side(e)}; };

  Decomposition out;
  std::vector<bool> visited(static_cast<std::size_t>(m), false);
  for (int label = 0; label < fragment.t(); ++label) {
    int e = fragment.open_end(label);
    if (!state.subset.contains(e)) continue;
    HalfEdge h = tail_half(e);
    if (endpoint(g, h) != fragment.labeled()[label]) continue;  // trail ends here
    while (true) {
      visited[h.edge] = true;
      HalfEdge arrive = h.other();
      int w = endpoint(g, arrive);
      if (fragment.is_labeled(w)) {
        out.trails.emplace_back(label, fragment.label_of(w));
        break;
      }
      h = next_out[slot(arrive)];
    }
  }
  for (int e : state.subset.to_vector()) {
    if (visited[e]) continue;
    ++out.circuits;
    HalfEdge h = tail_half(e);
    while (!visited[h.edge]) {
      visited[h.edge] = true;
      h = next_out[slot(h.other())];
    }
  }
  return out;
}

Decomposition decompose(const EulerianState& state, const MultiGraph& graph) {
  return decompose(state, Fragment(graph, {}));
}

GlueResult glue_tracked(const Fragment& first, const Fragment& second) {
  if (first.t() != second.t()) {
    throw std::domain_error("glue: fragments have t = " + std::to_string(first.t()) + " and " +
                            std::to_string(second.t()));
  }
  const int t = first.t();
  const Fragment* side[2] = {&first, &second};

  GlueResult out;
  MultiGraph& g = out.graph;
  std::vector<int> vmap[2];
  for (int s = 0; s < 2; ++s) {
    const MultiGraph& src = side[s]->graph();
    vmap[s].assign(static_cast<std::size_t>(src.vertex_count()), -1);
    for (int v = 0; v < src.vertex_count(); ++v) {
      if (!side[s]->is_labeled(v)) vmap[s][v] = g.add_vertex();
    }
  }
  out.from_first.resize(static_cast<std::size_t>(first.graph().edge_count()));
  out.from_second.resize(static_cast<std::size_t>(second.graph().edge_count()));
  std::vector<GluedEdgeRef>* refs[2] = {&out.from_first, &out.from_second};

  g.add_circles(first.graph().circle_count() + second.graph().circle_count());
  out.first_new_circle = g.circle_count();

  for (int s = 0; s < 2; ++s) {
    const MultiGraph& src = side[s]->graph();
    for (int e = 0; e < src.edge_count(); ++e) {
      const Edge& ed = src.edge(e);
      if (side[s]->is_labeled(ed.a) || side[s]->is_labeled(ed.b)) continue;
      (*refs[s])[e] = {GluedEdgeRef::Kind::kEdge, g.add_edge(vmap[s][ed.a], vmap[s][ed.b])};
    }
  }

  std::vector<bool> visited[2] = {std::vector<bool>(first.graph().edge_count(), false),
                                  std::vector<bool>(second.graph().edge_count(), false)};
  // Follows a chain of open ends starting on side s at edge e, entered from
  // the endpoint `from`. Returns the unlabeled vertex reached, or -1 if the
  // chain closes up into a circle.
  auto follow = [&](int s, int e, int from, std::vector<std::pair<int, int>>& chain) {
    while (true) {
      if (visited[s][e]) return -1;
      visited[s][e] = true;
      chain.emplace_back(s, e);
      const Edge& ed = side[s]->graph().edge(e);
      int other = ed.a == from ? ed.b : ed.a;
      int label = side[s]->label_of(other);
      if (label < 0) return vmap[s][other];
      s = 1 - s;
      e = side[s]->open_end(label);
      from = side[s]->labeled()[label];
    }
  };

  for (int s = 0; s < 2; ++s) {
    for (int label = 0; label < t; ++label) {
      int e = side[s]->open_end(label);
      if (visited[s][e]) continue;
      const Edge& ed = side[s]->graph().edge(e);
      int inner = ed.a == side[s]->labeled()[label] ? ed.b : ed.a;
      if (side[s]->is_labeled(inner)) continue;
      std::vector<std::pair<int, int>> chain;
      int end = follow(s, e, inner, chain);
      int id = g.add_edge(vmap[s][inner], end);
      for (auto [cs, ce] : chain) (*refs[cs])[ce] = {GluedEdgeRef::Kind::kEdge, id};
    }
  }
  // Whatever is left consists of label-to-label edges closing into circles.
  for (int label = 0; label < t; ++label) {
    int e = first.open_end(label);
    if (visited[0][e]) continue;
    std::vector<std::pair<int, int>> chain;
    follow(0, e, first.labeled()[label], chain);
    int id = g.circle_count();
    g.add_circles(1);
    for (auto [cs, ce] : chain) (*refs[cs])[ce] = {GluedEdgeRef::Kind::kCircle, id};
  }
  return out;
}

MultiGraph glue(const Fragment& first, const Fragment& second) { return glue_tracked(first, second).graph; }

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
  std::vector<Edge> edges = g.edges();
  const int shift = g.vertex_count();
  for (const Edge& e : h.edges()) edges.push_back({e.a + shift, e.b + shift});
  return MultiGraph(g.vertex_count() + h.vertex_count(), std::move(edges), g.circle_count() + h.circle_count());
}

MultiGraph spanning_subgraph(const MultiGraph& g, EdgeSet subset) {
  std::vector<Edge> edges;
  for (int e : subset.to_vector()) edges.push_back(g.edge(e));
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph cycle_graph(int n) {
  if (n < 1) throw std::domain_error("cycle_graph: n < 1");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph build_g_pi(int k, const std::vector<int>& perm) {
  const int size = k + 1;
  if (static_cast<int>(perm.size()) != size) throw std::domain_error("build_g_pi: permutation size != k + 1");
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int x : perm) {
    if (x < 0 || x >= size || seen[x]) throw std::domain_error("build_g_pi: not a permutation");
    seen[x] = true;
  }
  std::fill(seen.begin(), seen.end(), false);
  MultiGraph g;
  for (int s = 0; s < size; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    g = disjoint_union(g, cycle_graph(6 * len));
  }
  return g;
}

}  // namespace mixedpf
