#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mixedpf/generators.hpp"
#include "mixedpf/models.hpp"

using namespace mixedpf;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

LocalEvaluationRequest req(std::vector<int> sym, std::vector<ExtSlot> ext = {}) { return {std::move(sym), std::move(ext)}; }

ExtSlot f(int i) { return {i, false}; }
ExtSlot g(int i) { return {i, true}; }

}  // namespace

TEST(EvaluateLocal, SignsAndDuals) {
  EdgeColoringModel h(ColorSpace{1, 2}, 2);
  h.set(SymBasisIndex{{2}}, ExtBasisIndex{{0, 1}}, 1);
  EXPECT_EQ(evaluate_local(h, req({0, 0}, {f(0), f(1)})), gr(1));
  EXPECT_EQ(evaluate_local(h, req({0, 0}, {f(1), f(0)})), gr(-1));
  EXPECT_EQ(evaluate_local(h, req({0, 0}, {f(0), g(0)})), gr(-1));
  EXPECT_EQ(evaluate_local(h, req({0, 0}, {f(0), f(0)})), gr(0));
  EXPECT_EQ(evaluate_local(h, req({0}, {f(0), f(1)})), gr(0));
}

TEST(EvaluateLocal, RangeAndCapErrors) {
  const EdgeColoringModel h(ColorSpace{1, 2}, 2);
  EXPECT_THROW(evaluate_local(h, req({1})), std::domain_error);
  EXPECT_THROW(evaluate_local(h, req({}, {f(2)})), std::domain_error);
  EXPECT_THROW(evaluate_local(h, req({0, 0, 0})), std::domain_error);
}

TEST(EvaluateLocal, AntisymmetryAndDualExpansionOnRandomModels) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const ColorSpace space{trial % 3, 2 * (1 + trial % 2)};
    const EdgeColoringModel h = gen::random_sparse_model(rng, space, 2, 0.5);
    const int ell = space.ell();
    for_each_sym_index(space.k, space.k == 0 ? 0 : 2, [&](const SymBasisIndex& sym) {
      std::vector<int> colors;
      for (int c = 0; c < space.k; ++c) colors.insert(colors.end(), sym.counts[c], c);
      for (int a = 0; a < space.two_ell; ++a) {
        for (int b = 0; b < space.two_ell; ++b) {
          const GaussianRational ab = evaluate_local(h, req(colors, {f(a), f(b)}));
          EXPECT_EQ(ab, -evaluate_local(h, req(colors, {f(b), f(a)})));
          if (a == b) EXPECT_TRUE(ab.is_zero());
          const SignedIndex d = dual_basis(b, ell);
          GaussianRational expanded = evaluate_local(h, req(colors, {f(a), f(d.index)}));
          expanded.negate_if(d.sign < 0);
          EXPECT_EQ(evaluate_local(h, req(colors, {f(a), g(b)})), expanded);
        }
      }
    });
  }
}

TEST(EdgeColoringModel, SetByRequestAndEntries) {
  EdgeColoringModel h(ColorSpace{0, 2}, 0);
  h.set_by_request(req({}, {f(1), f(0)}), 5);
  EXPECT_EQ(h.value(SymBasisIndex{{}}, ExtBasisIndex{{0, 1}}), gr(-5));
  EXPECT_EQ(evaluate_local(h, req({}, {f(1), f(0)})), gr(5));
  EXPECT_EQ(h.entry_count(), 1u);
  h.set(SymBasisIndex{{}}, ExtBasisIndex{{0, 1}}, 0);
  EXPECT_EQ(h.entry_count(), 0u);
  EXPECT_THROW(h.set_by_request(req({}, {f(0), f(0)}), 1), std::domain_error);
}

TEST(Matchings, Values) {
  const EdgeColoringModel h = matchings_model(3);
  EXPECT_EQ(evaluate_local(h, req({0, 0, 1})), gr(1));
  EXPECT_EQ(evaluate_local(h, req({1, 1})), gr(0));
  EXPECT_EQ(evaluate_local(h, req({})), gr(1));
}

TEST(Charpoly, ValuesAndSupport) {
  const EdgeColoringModel h = charpoly_model(gr(7), 3);
  EXPECT_EQ(evaluate_local(h, req({0, 0}, {f(0), g(0)})), gr(1));
  EXPECT_EQ(evaluate_local(h, req({0, 1})), gr(0, 1));
  EXPECT_EQ(evaluate_local(h, req({1, 1})), gr(0));
  EXPECT_EQ(evaluate_local(h, req({0, 0, 0})), gr(7));
  EXPECT_EQ(h.value(SymBasisIndex{{1, 0}}, ExtBasisIndex{{0, 1}}), gr(-1));
  for (const auto& e : h.entries()) {
    const bool power_of_e1 = e.sym.counts[1] == 0;
    const bool one_e2 = e.sym.counts[1] == 1;
    const bool f_wedge_g = e.ext.indices == std::vector<int>{0, 1};
    EXPECT_TRUE((power_of_e1 && e.ext.indices.empty()) || (one_e2 && e.ext.indices.empty()) ||
                (power_of_e1 && f_wedge_g));
  }
}

TEST(CircuitPos, DoubleFactorials) {
  EXPECT_EQ(evaluate_local(circuit_pos_model(1, 4), req({0, 0, 0, 0})), gr(3));
  EXPECT_EQ(evaluate_local(circuit_pos_model(1, 4), req({0, 0, 0})), gr(0));
  EXPECT_EQ(evaluate_local(circuit_pos_model(2, 4), req({0, 0, 1, 1})), gr(1));
  EXPECT_EQ(evaluate_local(circuit_pos_model(3, 6), req({0, 0, 0, 0, 2, 2})), gr(3));
}

TEST(CircuitNeg, PairedWedges) {
  EXPECT_EQ(evaluate_local(circuit_neg_model(1), req({}, {f(0), g(0)})), gr(1));
  EXPECT_EQ(evaluate_local(circuit_neg_model(1), req({}, {f(0), f(1)})), gr(-1));
  EXPECT_EQ(evaluate_local(circuit_neg_model(2), req({}, {f(0), g(1)})), gr(0));
  EXPECT_EQ(evaluate_local(circuit_neg_model(2), req({}, {f(0), g(0), f(1), g(1)})), gr(1));
  EXPECT_EQ(evaluate_local(circuit_neg_model(2), req({})), gr(1));
}

TEST(TensorModel, Componentwise) {
  const EdgeColoringModel h = circuit_odd_model(1, 4);
  EXPECT_EQ(h.space(), (ColorSpace{1, 2}));
  EXPECT_EQ(evaluate_local(h, req({0, 0}, {f(0), g(0)})), gr(1));
  EXPECT_EQ(evaluate_local(h, req({})), gr(1));
  EXPECT_EQ(evaluate_local(h, req({0, 0, 0}, {f(0), g(0)})), gr(0));
  EXPECT_EQ(evaluate_local(h, req({0, 0, 0})), gr(0));
  EXPECT_THROW(tensor_model(circuit_odd_model(1, 2), circuit_neg_model(1)), std::domain_error);
  EXPECT_THROW(tensor_model(circuit_pos_model(1, 2), circuit_pos_model(1, 2)), std::domain_error);
}

TEST(ForEachSymIndex, CountsMultisets) {
  int n = 0;
  for_each_sym_index(3, 2, [&](const SymBasisIndex& s) {
    EXPECT_LE(s.degree(), 2);
    ++n;
  });
  EXPECT_EQ(n, 10);
}
