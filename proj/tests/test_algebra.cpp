#include <gtest/gtest.h>

#include <random>

#include "mixedpf/algebra.hpp"

using namespace mixedpf;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

}  // namespace

TEST(GaussianRational, FieldOperationsStayCanonical) {
  const GaussianRational a(Rational(2, 4), Rational(-3, 6));
  EXPECT_EQ(a.re().get_den(), 2);
  EXPECT_EQ(a.im(), Rational(-1, 2));
  const GaussianRational b = gr(1, 1);
  EXPECT_EQ(b * b.conj(), gr(2));
  EXPECT_EQ(GaussianRational::imaginary_unit() * GaussianRational::imaginary_unit(), gr(-1));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW((void)(a / GaussianRational()), std::domain_error);
}

TEST(GaussianRational, StringsRoundTrip) {
  EXPECT_EQ(gr(4).to_string(), "4");
  EXPECT_EQ(GaussianRational(Rational(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(gr(0, 1).to_string(), "i");
  EXPECT_EQ(gr(2, -1).to_string(), "2-i");
  EXPECT_EQ(GaussianRational::parse("i"), gr(0, 1));
  EXPECT_EQ(GaussianRational::parse("-i"), gr(0, -1));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  std::uniform_int_distribution<int> pos(1, 9);
  for (int i = 0; i < 200; ++i) {
    const GaussianRational z(Rational(d(rng), pos(rng)), Rational(d(rng), pos(rng)));
    EXPECT_EQ(GaussianRational::parse(z.to_string()), z) << z.to_string();
  }
  EXPECT_THROW(GaussianRational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(GaussianRational::parse("abc"), std::invalid_argument);
}

TEST(GaussianRational, PowersOfI) {
  EXPECT_EQ(i_power(0), gr(1));
  EXPECT_EQ(i_power(1), gr(0, 1));
  EXPECT_EQ(i_power(2), gr(-1));
  EXPECT_EQ(i_power(3), gr(0, -1));
  EXPECT_EQ(i_power(-1), gr(0, -1));
  EXPECT_EQ(i_power(6), gr(-1));
}

TEST(DualBasis, Examples) {
  // 0-based: (i=1, l=2) -> (-1, 3) becomes (0, 2) -> (-1, 2).
  EXPECT_EQ(dual_basis(0, 2), (SignedIndex{-1, 2}));
  EXPECT_EQ(dual_basis(2, 2), (SignedIndex{1, 0}));
  EXPECT_EQ(dual_basis(1, 1), (SignedIndex{1, 0}));
  EXPECT_THROW(dual_basis(4, 2), std::domain_error);
  EXPECT_THROW(dual_basis(-1, 2), std::domain_error);
}

TEST(DualBasis, TwiceIsMinusIdentity) {
  for (int ell = 1; ell <= 4; ++ell) {
    for (int i = 0; i < 2 * ell; ++i) {
      const SignedIndex once = dual_basis(i, ell);
      const SignedIndex twice = dual_basis(once.index, ell);
      EXPECT_EQ(twice.index, i);
      EXPECT_EQ(once.sign * twice.sign, -1);
    }
  }
}

TEST(SuperForm, Examples) {
  const ColorSpace s{1, 2};
  EXPECT_EQ(super_bilinear_form(MixedVector::basis(s, 0), MixedVector::basis(s, 0)), gr(1));
  EXPECT_EQ(super_bilinear_form(MixedVector::basis(s, 1), MixedVector::basis(s, 2)), gr(1));
  EXPECT_EQ(super_bilinear_form(MixedVector::basis(s, 2), MixedVector::basis(s, 1)), gr(-1));
  EXPECT_EQ(super_bilinear_form(MixedVector::basis(s, 1), MixedVector::basis(s, 1)), gr(0));
  EXPECT_THROW(super_bilinear_form(MixedVector(ColorSpace{1, 2}), MixedVector(ColorSpace{2, 2})), std::domain_error);
}

TEST(SuperForm, SymmetryOnBlocksAndBilinearity) {
  const ColorSpace s{2, 4};
  for (int a = 0; a < s.dimension(); ++a) {
    for (int b = 0; b < s.dimension(); ++b) {
      const int ab = super_form_on_basis(s, a, b);
      const int ba = super_form_on_basis(s, b, a);
      EXPECT_EQ(super_bilinear_form(MixedVector::basis(s, a), MixedVector::basis(s, b)), gr(ab));
      if (a < s.k && b < s.k) EXPECT_EQ(ab, ba);
      if (a >= s.k && b >= s.k) EXPECT_EQ(ab, -ba);
      if ((a < s.k) != (b < s.k)) EXPECT_EQ(ab, 0);
    }
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  auto random_vector = [&] {
    MixedVector v(s);
    for (auto& x : v.entries) x = gr(d(rng), d(rng));
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const MixedVector x = random_vector();
    const MixedVector x2 = random_vector();
    const MixedVector y = random_vector();
    const GaussianRational a = gr(d(rng), d(rng));
    const GaussianRational b = gr(d(rng), d(rng));
    MixedVector combo(s);
    for (std::size_t i = 0; i < combo.entries.size(); ++i) combo.entries[i] = a * x.entries[i] + b * x2.entries[i];
    EXPECT_EQ(super_bilinear_form(combo, y), a * super_bilinear_form(x, y) + b * super_bilinear_form(x2, y));
  }
}

TEST(DoubleFactorial, Convention) {
  EXPECT_EQ(double_factorial_odd(5), 15);
  EXPECT_EQ(double_factorial_odd(4), 0);
  EXPECT_EQ(double_factorial_odd(0), 0);
  EXPECT_EQ(double_factorial_odd(-1), 1);
  EXPECT_EQ(double_factorial_odd(1), 1);
  EXPECT_THROW(double_factorial_odd(-2), std::domain_error);
}

TEST(PermutationSign, SmallCases) {
  EXPECT_EQ(permutation_sign({}), 1);
  EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({1, 2, 0}), 1);
  EXPECT_EQ(permutation_sign({3, 2, 1, 0}), 1);
}
