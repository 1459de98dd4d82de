#include <gtest/gtest.h>

#include "mixedpf/generators.hpp"
#include "mixedpf/oracles.hpp"

using namespace mixedpf;
using oracles::Polynomial;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

Polynomial poly(std::vector<long> c) {
  std::vector<GaussianRational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

MultiGraph k3() { return MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
MultiGraph loop() { return MultiGraph(1, {{0, 0}}); }
MultiGraph figure_eight() { return MultiGraph(1, {{0, 0}, {0, 0}}); }

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_TRUE(poly({0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(poly({1, 1}) * poly({-1, 1}), poly({-1, 0, 1}));
  EXPECT_EQ(poly({1, 1}) + poly({-1, -1}), Polynomial());
  EXPECT_EQ(poly({3, 0, 2})(gr(0, 1)), gr(1));
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(oracles::charpoly_oracle(k3()), poly({-2, -3, 0, 1}));
  EXPECT_EQ(oracles::charpoly_oracle(loop()), poly({-2, 1}));
  EXPECT_EQ(oracles::adjacency_determinant(cycle_graph(6)), -4);
  EXPECT_EQ(oracles::adjacency_determinant(cycle_graph(4)), 0);
  EXPECT_EQ(oracles::adjacency_determinant(cycle_graph(12)), 0);
  EXPECT_THROW(oracles::charpoly_oracle(MultiGraph(0, {}, 1)), std::domain_error);
  EXPECT_EQ(oracles::charpoly_oracle(MultiGraph()), poly({1}));
}

TEST(Sachs, Examples) {
  EXPECT_EQ(oracles::sachs_oracle(k3(), 0), gr(-2));
  EXPECT_EQ(oracles::sachs_oracle(loop(), 5), gr(3));
  EXPECT_EQ(oracles::sachs_oracle(MultiGraph(3), gr(2, 1)), gr(2, 1) * gr(2, 1) * gr(2, 1));
  EXPECT_THROW(oracles::sachs_oracle(MultiGraph(0, {}, 1), 0), std::domain_error);
}

TEST(Sachs, AgreesWithCharpoly) {
  gen::Rng rng(31);
  const std::vector<GaussianRational> ts = {gr(0), gr(3), GaussianRational(Rational(-1, 3)), gr(1, 2),
                                            GaussianRational(Rational(5, 2))};
  for (const MultiGraph& g : gen::all_multigraphs(4, 5, true)) {
    const Polynomial p = oracles::charpoly_oracle(g);
    for (const auto& t : ts) EXPECT_EQ(oracles::sachs_oracle(g, t), p(t));
  }
  for (int i = 0; i < 30; ++i) {
    const MultiGraph g = gen::random_multigraph(rng, 5, 7, true);
    EXPECT_EQ(oracles::sachs_oracle(g, gr(2)), oracles::charpoly_oracle(g)(gr(2)));
  }
}

TEST(CircuitPartition, Examples) {
  EXPECT_EQ(oracles::circuit_partition_oracle(figure_eight()), poly({0, 2, 1}));
  EXPECT_EQ(oracles::circuit_partition_oracle(cycle_graph(2)), poly({0, 1}));
  EXPECT_EQ(oracles::circuit_partition_oracle(MultiGraph(0, {}, 1)), poly({0, 1}));
  EXPECT_TRUE(oracles::circuit_partition_oracle(MultiGraph(2, {{0, 1}})).is_zero());
  EXPECT_EQ(oracles::circuit_partition_oracle(MultiGraph()), poly({1}));
}

TEST(CircuitPartition, Convolution) {
  const std::vector<std::pair<long, long>> xy = {{1, 1}, {2, -3}, {-2, 5}, {3, 0}};
  for (const MultiGraph& g : gen::all_multigraphs(3, 5, true)) {
    const Polynomial j = oracles::circuit_partition_oracle(g);
    for (auto [x, y] : xy) {
      GaussianRational sum;
      const EdgeSet all = EdgeSet::all(g.edge_count());
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
        const EdgeSet a(bits);
        sum += oracles::circuit_partition_oracle(spanning_subgraph(g, a))(x) *
               oracles::circuit_partition_oracle(spanning_subgraph(g, a ^ all))(y);
      }
      EXPECT_EQ(j(x + y), sum);
    }
  }
}

TEST(Oracles, MultiplyOverDisjointUnions) {
  gen::Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    const MultiGraph a = gen::random_multigraph(rng, 3, 4, true);
    const MultiGraph b = gen::random_multigraph(rng, 3, 4, true);
    const MultiGraph both = disjoint_union(a, b);
    EXPECT_EQ(oracles::charpoly_oracle(both), oracles::charpoly_oracle(a) * oracles::charpoly_oracle(b));
    EXPECT_EQ(oracles::circuit_partition_oracle(both),
              oracles::circuit_partition_oracle(a) * oracles::circuit_partition_oracle(b));
    EXPECT_EQ(oracles::matching_count_oracle(both),
              oracles::matching_count_oracle(a) * oracles::matching_count_oracle(b));
  }
}

TEST(Matchings, Examples) {
  EXPECT_EQ(oracles::matching_count_oracle(k3()), 4u);
  EXPECT_EQ(oracles::matching_count_oracle(MultiGraph(2, {{0, 1}})), 2u);
  EXPECT_EQ(oracles::matching_count_oracle(MultiGraph(3, {{0, 1}, {1, 2}})), 3u);
  EXPECT_EQ(oracles::matching_count_oracle(loop()), 1u);
}

TEST(PermutationSignOracle, Examples) {
  const DirectedMatching m{{{1, 2}, {3, 4}}};
  EXPECT_EQ(oracles::permutation_sign_oracle(m, m), 1);
  EXPECT_EQ(oracles::permutation_sign_oracle(DirectedMatching{{{1, 2}}}, DirectedMatching{{{2, 1}}}), -1);
  EXPECT_THROW(oracles::permutation_sign_oracle(DirectedMatching{{{1, 2}}}, DirectedMatching{{{1, 3}}}),
               std::domain_error);
}

TEST(GaussianRank, Examples) {
  EXPECT_EQ(oracles::gaussian_rank({{gr(1), gr(2)}, {gr(2), gr(4)}}), 1);
  EXPECT_EQ(oracles::gaussian_rank({{gr(0, 1), gr(1)}, {gr(1), gr(0, -1)}}), 1);
  EXPECT_EQ(oracles::gaussian_rank({{gr(1), gr(0)}, {gr(0), gr(1)}}), 2);
}
