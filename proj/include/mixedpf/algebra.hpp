#pragma once

#include <cstdint>
#include <vector>

#include "mixedpf/gaussian_rational.hpp"

namespace mixedpf {

/// Split of the color space V_{k,2l} = V_k (+) V_{2l}.
struct ColorSpace {
  int k = 0;
  int two_ell = 0;

  int ell() const { return two_ell / 2; }
  int dimension() const { return k + two_ell; }
  friend bool operator==(const ColorSpace&, const ColorSpace&) = default;
};

/// Multiplicities of each symmetric color; counts.size() == k.
struct SymBasisIndex {
  std::vector<int> counts;

  int degree() const;
  friend auto operator<=>(const SymBasisIndex&, const SymBasisIndex&) = default;
};

/// Strictly increasing 0-based exterior indices: f_{i1} ^ ... ^ f_{in}.
struct ExtBasisIndex {
  std::vector<int> indices;

  int degree() const { return static_cast<int>(indices.size()); }
  std::uint32_t mask() const;
  static ExtBasisIndex from_mask(std::uint32_t mask);
  friend auto operator<=>(const ExtBasisIndex&, const ExtBasisIndex&) = default;
};

struct SignedIndex {
  int sign = 1;
  int index = 0;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// The dual vector g_i written as +-f_j (0-based): g_i = -f_{i+l} for i < l,
/// g_i = f_{i-l} otherwise. Throws std::domain_error when i is out of range.
SignedIndex dual_basis(int i, int ell);

/// Vector of V_{k,2l}; the first k entries are the symmetric block.
struct MixedVector {
  ColorSpace space;
  std::vector<GaussianRational> entries;

  explicit MixedVector(ColorSpace s) : space(s), entries(static_cast<std::size_t>(s.dimension())) {}

  static MixedVector basis(ColorSpace s, int slot);
};

/// [x, y] = x0^T y0 + x1^T J y1 with J = [[0, I], [-I, 0]].
GaussianRational super_bilinear_form(const MixedVector& x, const MixedVector& y);

/// [b_a, b_b] on basis slots of V_{k,2l}; returns -1, 0 or 1.
int super_form_on_basis(ColorSpace space, int a, int b);

/// n!! for odd n (with (-1)!! = 1), and 0 for even n >= 0. Throws for n < -1.
long double_factorial_odd(int n);

/// Sign (+1/-1) of a permutation given as an image vector.
int permutation_sign(const std::vector<int>& perm);

}  // namespace mixedpf
