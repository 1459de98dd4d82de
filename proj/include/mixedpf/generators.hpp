#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mixedpf/graph.hpp"
#include "mixedpf/models.hpp"

// Seeded generators for the property suites. All randomness comes from a
// std::mt19937_64 seeded by the caller; the same seed gives the same output
// with the same standard library.
namespace mixedpf::gen {

using Rng = std::mt19937_64;

/// Every labeled simple graph on exactly n vertices (2^{n(n-1)/2} graphs).
std::vector<MultiGraph> all_simple_graphs(int n);

/// One representative per isomorphism class of multigraphs with at most
/// `max_vertices` vertices (isolated vertices allowed) and at most
/// `max_edges` edges. Loops are included when `loops` is set.
std::vector<MultiGraph> all_multigraphs(int max_vertices, int max_edges, bool loops);

/// Sorted edge list of the lexicographically least relabeling. Tries every
/// vertex permutation, so keep graphs small.
std::vector<Edge> canonical_edges(const MultiGraph& g);

/// Random multigraph with 1..max_vertices vertices and 0..max_edges edges.
MultiGraph random_multigraph(Rng& rng, int max_vertices, int max_edges, bool loops);

/// Random t-fragment with up to `max_internal` unlabeled vertices and at most
/// `max_edges` edges in total (open ends included).
Fragment random_fragment(Rng& rng, int t, int max_internal, int max_edges);

/// Model on `space` whose entries on all basis elements with symmetric degree
/// at most `cap` are nonzero with probability `density`; values are small
/// Gaussian integers.
EdgeColoringModel random_sparse_model(Rng& rng, ColorSpace space, int cap, double density);

/// All t-fragments built from up to `max_internal` unlabeled vertices with at
/// most `max_edges` edges; isomorphic duplicates are kept. Stops after
/// `limit` fragments when limit > 0.
std::vector<Fragment> all_fragments(int t, int max_internal, int max_edges, std::size_t limit = 0);

}  // namespace mixedpf::gen
