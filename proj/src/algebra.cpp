#include "mixedpf/algebra.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mixedpf {

int SymBasisIndex::degree() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::uint32_t ExtBasisIndex::mask() const {
  std::uint32_t m = 0;
  for (int i : indices) m |= 1u << i;
  return m;
}

ExtBasisIndex ExtBasisIndex::from_mask(std::uint32_t mask) {
  ExtBasisIndex e;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) e.indices.push_back(i);
  }
  return e;
}

SignedIndex dual_basis(int i, int ell) {
  if (ell < 0 || i < 0 || i >= 2 * ell) {
    throw std::domain_error("dual_basis: index " + std::to_string(i) + " outside [0, " +
                            std::to_string(2 * ell) + ")");
  }
  if (i < ell) return {-1, i + ell};
  return {1, i - ell};
}

MixedVector MixedVector::basis(ColorSpace s, int slot) {
  MixedVector v(s);
  v.entries.at(static_cast<std::size_t>(slot)) = 1;
  return v;
}

int super_form_on_basis(ColorSpace space, int a, int b) {
  const int k = space.k;
  const int ell = space.ell();
  if (a < k || b < k) return (a == b && a < k) ? 1 : 0;
  int i = a - k;
  int j = b - k;
  if (i < ell && j == i + ell) return 1;
  if (i >= ell && j == i - ell) return -1;
  return 0;
}

GaussianRational super_bilinear_form(const MixedVector& x, const MixedVector& y) {
  if (!(x.space == y.space) || x.entries.size() != y.entries.size()) {
    throw std::domain_error("super_bilinear_form: dimension mismatch");
  }
  const int k = x.space.k;
  const int ell = x.space.ell();
  GaussianRational acc;
  for (int a = 0; a < k; ++a) acc += x.entries[a] * y.entries[a];
  for (int i = 0; i < ell; ++i) {
    acc += x.entries[k + i] * y.entries[k + i + ell];
    acc -= x.entries[k + i + ell] * y.entries[k + i];
  }
  return acc;
}

long double_factorial_odd(int n) {
  if (n < -1) throw std::domain_error("double_factorial_odd: n < -1");
  if (n >= 0 && n % 2 == 0) return 0;
  long r = 1;
  for (int m = n; m > 1; m -= 2) r *= m;
  return r;
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace mixedpf
