#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace mixedpf {

struct Edge {
  int a = 0;
  int b = 0;

  bool is_loop() const { return a == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Subset of edge ids of a graph with at most 64 edges.
class EdgeSet {
 public:
  static constexpr int kMaxEdges = 64;

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}
  static EdgeSet all(int edge_count);

  bool contains(int e) const { return (bits_ >> e) & 1u; }
  void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<int> to_vector() const;

  friend EdgeSet operator^(EdgeSet x, EdgeSet y) { return EdgeSet(x.bits_ ^ y.bits_); }
  friend EdgeSet operator|(EdgeSet x, EdgeSet y) { return EdgeSet(x.bits_ | y.bits_); }
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite multigraph with loops, parallel edges and vertexless circle
/// components. A loop contributes 2 to the degree of its vertex.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n_vertices, std::vector<Edge> edges = {}, int n_circles = 0);

  int vertex_count() const { return n_vertices_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int circle_count() const { return n_circles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  int add_vertex() { return n_vertices_++; }
  int add_edge(int a, int b);
  void add_circles(int n) { n_circles_ += n; }

  int degree(int v) const;
  std::vector<int> degrees() const;
  int max_degree() const;
  /// Degree of v counting only edges of `subset`.
  int degree_in(int v, EdgeSet subset) const;

  /// Every vertex has even degree (circles are always Eulerian).
  bool is_eulerian() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_vertices_ = 0;
  std::vector<Edge> edges_;
  int n_circles_ = 0;
};

/// Incidence of one edge at one of its two endpoints; side 0 is Edge::a.
struct HalfEdge {
  int edge = 0;
  int side = 0;

  HalfEdge other() const { return {edge, 1 - side}; }
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

inline int endpoint(const MultiGraph& g, HalfEdge h) {
  const Edge& e = g.edge(h.edge);
  return h.side == 0 ? e.a : e.b;
}

/// Graph with t labeled vertices of degree one; labels are 1..t in the order
/// of `labeled`.
class Fragment {
 public:
  Fragment() = default;
  /// Throws std::domain_error unless each labeled vertex is distinct, has
  /// degree exactly 1 and carries no loop.
  Fragment(MultiGraph graph, std::vector<int> labeled);

  const MultiGraph& graph() const { return graph_; }
  const std::vector<int>& labeled() const { return labeled_; }
  int t() const { return static_cast<int>(labeled_.size()); }

  /// 0-based label position of v, or -1 if v is unlabeled.
  int label_of(int v) const { return label_of_.at(static_cast<std::size_t>(v)); }
  bool is_labeled(int v) const { return label_of(v) >= 0; }
  /// The edge incident with the labeled vertex at position `label`.
  int open_end(int label) const { return open_end_.at(static_cast<std::size_t>(label)); }
  std::vector<int> unlabeled_vertices() const;

 private:
  MultiGraph graph_;
  std::vector<int> labeled_;
  std::vector<int> label_of_;
  std::vector<int> open_end_;
};

/// Ordered (incoming, outgoing) pair of half-edges at a vertex.
struct Pairing {
  HalfEdge in;
  HalfEdge out;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// An Eulerian edge subset with an Eulerian orientation and a compatible
/// local pairing at every unlabeled vertex.
struct EulerianState {
  EdgeSet subset;
  /// Per edge id; an edge in `subset` runs a -> b unless reversed.
  std::vector<bool> reversed;
  /// Per vertex; empty at labeled vertices and vertices outside the subset.
  std::vector<std::vector<Pairing>> pairing;

  /// Side of the half-edge at which edge e starts.
  int tail_side(int e) const { return reversed[static_cast<std::size_t>(e)] ? 1 : 0; }
  bool is_outgoing(HalfEdge h) const { return h.side == tail_side(h.edge); }

  friend bool operator==(const EulerianState&, const EulerianState&) = default;
};

struct Decomposition {
  int circuits = 0;
  /// Directed trails between labeled vertices as 0-based (start, end) labels.
  std::vector<std::pair<int, int>> trails;
};

/// Every unlabeled vertex of `fragment` has even degree in `subset`.
bool is_eulerian_subset(const Fragment& fragment, EdgeSet subset);

/// All Eulerian subsets in increasing bit order, enumerated from a GF(2)
/// basis of the solution space of the parity constraints.
std::vector<EdgeSet> enumerate_eulerian_subsets(const Fragment& fragment);
std::vector<EdgeSet> enumerate_eulerian_subsets(const MultiGraph& graph);

/// A valid (orientation, pairing) for `subset`. Seed 0 is the canonical
/// choice; other seeds shuffle the transitions and walk directions.
/// Throws std::domain_error if `subset` is not Eulerian.
EulerianState eulerian_state(const Fragment& fragment, EdgeSet subset, unsigned seed = 0);
EulerianState eulerian_state(const MultiGraph& graph, EdgeSet subset, unsigned seed = 0);

/// Throws std::domain_error describing the first violated invariant.
void validate_state(const Fragment& fragment, const EulerianState& state);

Decomposition decompose(const EulerianState& state, const Fragment& fragment);
Decomposition decompose(const EulerianState& state, const MultiGraph& graph);

/// Where an edge of a glued fragment ended up.
struct GluedEdgeRef {
  enum class Kind { kEdge, kCircle };
  Kind kind = Kind::kEdge;
  int index = 0;
  friend bool operator==(const GluedEdgeRef&, const GluedEdgeRef&) = default;
};

struct GlueResult {
  MultiGraph graph;
  std::vector<GluedEdgeRef> from_first;
  std::vector<GluedEdgeRef> from_second;
  /// Circles of the glued graph that were created by the gluing itself start
  /// at this index; earlier circles came from the inputs.
  int first_new_circle = 0;
};

/// F1 * F2: labeled vertices removed and open ends with equal labels fused.
/// Throws std::domain_error if the fragments have different t.
GlueResult glue_tracked(const Fragment& first, const Fragment& second);
MultiGraph glue(const Fragment& first, const Fragment& second);

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h);

/// (V, subset) with all vertices kept and circles dropped.
MultiGraph spanning_subgraph(const MultiGraph& g, EdgeSet subset);

/// C_n; n == 1 is a loop, n == 2 a pair of parallel edges.
MultiGraph cycle_graph(int n);

/// Disjoint union of cycles C_{6c} over the cycle lengths c of `perm`, a
/// permutation of {0, ..., k}.
MultiGraph build_g_pi(int k, const std::vector<int>& perm);

}  // namespace mixedpf
