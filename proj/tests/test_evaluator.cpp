#include <gtest/gtest.h>
#include <omp.h>

#include "mixedpf/evaluator.hpp"
#include "mixedpf/generators.hpp"

using namespace mixedpf;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

MultiGraph k3() { return MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
MultiGraph figure_eight() { return MultiGraph(1, {{0, 0}, {0, 0}}); }
MultiGraph circle() { return MultiGraph(0, {}, 1); }

GaussianRational p(const MultiGraph& g, const EdgeColoringModel& h, Mode mode) {
  return partition_function(g, h, mode).value;
}

}  // namespace

TEST(Mode, Names) {
  EXPECT_EQ(parse_mode("skew"), Mode::kSkew);
  EXPECT_EQ(to_string(Mode::kMixed), "mixed");
  EXPECT_THROW(parse_mode("other"), std::invalid_argument);
}

TEST(PartitionFunction, Examples) {
  EXPECT_EQ(p(circle(), charpoly_model(0, 0), Mode::kMixed), gr(0));
  EXPECT_EQ(p(k3(), matchings_model(2), Mode::kOrdinary), gr(4));
  EXPECT_EQ(p(figure_eight(), circuit_pos_model(1, 4), Mode::kOrdinary), gr(3));
  EXPECT_EQ(p(MultiGraph(), matchings_model(0), Mode::kOrdinary), gr(1));
}

TEST(PartitionFunction, CircleFactors) {
  gen::Rng rng(2);
  const EdgeColoringModel h = gen::random_sparse_model(rng, {2, 4}, 2, 0.5);
  EXPECT_EQ(p(circle(), h, Mode::kMixed), gr(-2));
  const EdgeColoringModel sym = gen::random_sparse_model(rng, {3, 0}, 2, 0.5);
  EXPECT_EQ(p(circle(), sym, Mode::kOrdinary), gr(3));
  const EdgeColoringModel ext = gen::random_sparse_model(rng, {0, 4}, 0, 0.5);
  EXPECT_EQ(p(MultiGraph(0, {}, 2), ext, Mode::kSkew), gr(16));
}

TEST(PartitionFunction, ModeMismatch) {
  EXPECT_THROW(p(k3(), charpoly_model(0, 2), Mode::kOrdinary), std::domain_error);
  EXPECT_THROW(p(k3(), matchings_model(2), Mode::kSkew), std::domain_error);
  EXPECT_THROW(p(k3(), matchings_model(1), Mode::kOrdinary), std::domain_error);
}

TEST(PartitionFunction, SkewOfNonEulerianIsZero) {
  EXPECT_EQ(p(MultiGraph(2, {{0, 1}}), circuit_neg_model(1), Mode::kSkew), gr(0));
}

TEST(SH, TriangleWithConstantModel) {
  EdgeColoringModel h(ColorSpace{1, 0}, 2);
  for (int d = 0; d <= 2; ++d) h.set(SymBasisIndex{{d}}, ExtBasisIndex{}, 1);
  EXPECT_EQ(s_h(k3(), EdgeSet(0), h, eulerian_state(k3(), EdgeSet(0), 0)), gr(1));
}

TEST(SH, FigureEightSkewVanishes) {
  const EdgeColoringModel h = circuit_neg_model(1);
  for (unsigned seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(s_h(figure_eight(), EdgeSet(3), h, eulerian_state(figure_eight(), EdgeSet(3), seed)), gr(0));
  }
}

TEST(SH, RejectsForeignState) {
  const EdgeColoringModel h = circuit_neg_model(1);
  EXPECT_THROW(s_h(k3(), EdgeSet(7), h, eulerian_state(k3(), EdgeSet(0), 0)), std::domain_error);
}

TEST(SH, DegreeAboveTwoEllVanishes) {
  gen::Rng rng(6);
  const EdgeColoringModel h = gen::random_sparse_model(rng, {1, 2}, 4, 1.0);
  // Four subset half-edges at the single vertex cannot fit in a 2-dimensional wedge.
  EXPECT_EQ(s_h(figure_eight(), EdgeSet(3), h, eulerian_state(figure_eight(), EdgeSet(3), 0)), gr(0));
}

TEST(InvarianceCheck, Examples) {
  gen::Rng rng(10);
  EXPECT_TRUE(invariance_check(figure_eight(), EdgeSet(3), gen::random_sparse_model(rng, {0, 2}, 0, 0.6), 10));
  EXPECT_TRUE(invariance_check(k3(), EdgeSet(7), gen::random_sparse_model(rng, {0, 4}, 0, 0.6), 10));
  EXPECT_TRUE(invariance_check(k3(), EdgeSet(0), gen::random_sparse_model(rng, {1, 4}, 2, 0.6), 10));
}

TEST(Kernel, AgreesWithReference) {
  gen::Rng rng(12);
  const std::vector<ColorSpace> spaces = {{1, 0}, {2, 0}, {3, 0}, {0, 2}, {0, 4}, {1, 2}, {2, 2}, {1, 4}};
  for (int i = 0; i < 120; ++i) {
    MultiGraph g = gen::random_multigraph(rng, 4, 7, true);
    g.add_circles(i % 3 == 0 ? 1 : 0);
    const ColorSpace space = spaces[static_cast<std::size_t>(i) % spaces.size()];
    const EdgeColoringModel h = gen::random_sparse_model(rng, space, std::max(1, g.max_degree()), 0.6);
    for (Mode mode : {Mode::kOrdinary, Mode::kSkew, Mode::kMixed}) {
      if ((mode == Mode::kOrdinary && space.two_ell > 0) || (mode == Mode::kSkew && space.k > 0)) continue;
      EXPECT_EQ(p(g, h, mode), reference::partition_function(g, h, mode).value) << i;
    }
    for (EdgeSet subset : enumerate_eulerian_subsets(g)) {
      const EulerianState st = eulerian_state(g, subset, static_cast<unsigned>(i));
      EXPECT_EQ(s_h(g, subset, h, st), reference::s_h(g, subset, h, st));
    }
  }
}

TEST(Kernel, CountersMatchReferenceWhenNothingIsPruned) {
  EdgeColoringModel h(ColorSpace{2, 0}, 3);
  for_each_sym_index(2, 3, [&](const SymBasisIndex& s) { h.set(s, ExtBasisIndex{}, 1); });
  const MultiGraph g = k3();
  EXPECT_EQ(partition_function(g, h, Mode::kOrdinary).counters.eulerian_subsets, 1u);
  EXPECT_EQ(p(g, h, Mode::kOrdinary), gr(8));
  EXPECT_EQ(reference::partition_function(g, h, Mode::kOrdinary).counters.colorings, 8u);
}

TEST(Properties, SpecializationOnSmallGraphs) {
  gen::Rng rng(13);
  for (const MultiGraph& g : gen::all_multigraphs(3, 5, true)) {
    const EdgeColoringModel sym = gen::random_sparse_model(rng, {2, 0}, std::max(1, g.max_degree()), 0.7);
    const EdgeColoringModel ext = gen::random_sparse_model(rng, {0, 2}, 0, 0.7);
    EXPECT_EQ(p(g, sym, Mode::kMixed), p(g, sym, Mode::kOrdinary));
    EXPECT_EQ(p(g, ext, Mode::kMixed), p(g, ext, Mode::kSkew));
  }
}

TEST(Properties, Multiplicativity) {
  gen::Rng rng(14);
  for (int i = 0; i < 30; ++i) {
    MultiGraph a = gen::random_multigraph(rng, 3, 4, true);
    MultiGraph b = gen::random_multigraph(rng, 3, 4, true);
    a.add_circles(i % 2);
    const MultiGraph both = disjoint_union(a, b);
    const int cap = std::max(1, both.max_degree());
    const EdgeColoringModel mixed = gen::random_sparse_model(rng, {1 + i % 2, 2}, cap, 0.7);
    const EdgeColoringModel sym = gen::random_sparse_model(rng, {2, 0}, cap, 0.7);
    const EdgeColoringModel ext = gen::random_sparse_model(rng, {0, 4}, 0, 0.7);
    EXPECT_EQ(p(both, mixed, Mode::kMixed), p(a, mixed, Mode::kMixed) * p(b, mixed, Mode::kMixed));
    EXPECT_EQ(p(both, sym, Mode::kOrdinary), p(a, sym, Mode::kOrdinary) * p(b, sym, Mode::kOrdinary));
    EXPECT_EQ(p(both, ext, Mode::kSkew), p(a, ext, Mode::kSkew) * p(b, ext, Mode::kSkew));
  }
}

TEST(Properties, TensorProductSplitsOverEulerianSubsets) {
  gen::Rng rng(15);
  for (int i = 0; i < 40; ++i) {
    const MultiGraph g = gen::random_multigraph(rng, 4, 6, true);
    const int cap = std::max(1, g.max_degree());
    const EdgeColoringModel h0 = gen::random_sparse_model(rng, {1 + i % 2, 0}, cap, 0.7);
    const EdgeColoringModel h1 = gen::random_sparse_model(rng, {0, 2 + 2 * (i % 2)}, 0, 0.7);
    GaussianRational split;
    for (EdgeSet subset : enumerate_eulerian_subsets(g)) {
      const EdgeSet rest = subset ^ EdgeSet::all(g.edge_count());
      split += p(spanning_subgraph(g, rest), h0, Mode::kOrdinary) * p(spanning_subgraph(g, subset), h1, Mode::kSkew);
    }
    EXPECT_EQ(p(g, tensor_model(h0, h1), Mode::kMixed), split);
  }
}

TEST(Properties, OrderIndependentUnderThreadCounts) {
  gen::Rng rng(16);
  const MultiGraph g = gen::random_multigraph(rng, 5, 10, true);
  const EdgeColoringModel h = gen::random_sparse_model(rng, {2, 2}, std::max(1, g.max_degree()), 0.8);
  const GaussianRational serial = reference::partition_function(g, h, Mode::kMixed).value;
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 4, 7}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(p(g, h, Mode::kMixed), serial) << threads;
    EXPECT_EQ(p(k3(), h, Mode::kMixed), reference::partition_function(k3(), h, Mode::kMixed).value) << threads;
  }
  omp_set_num_threads(saved);
}
