#pragma once

#include <cstdint>
#include <vector>

#include "mixedpf/connection.hpp"
#include "mixedpf/gaussian_rational.hpp"
#include "mixedpf/graph.hpp"

// Brute-force ground truth. Nothing in here goes through the coloring
// kernel or the edge-coloring models.
namespace mixedpf::oracles {

/// Dense polynomial over Q(i); coefficient i belongs to x^i. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coefficients);
  static Polynomial monomial(int degree, GaussianRational c = 1);

  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  GaussianRational operator()(const GaussianRational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Adjacency matrix with A(i,i) = 2 * (number of loops at i).
std::vector<std::vector<Rational>> adjacency_matrix(const MultiGraph& g);

/// Determinant by Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

/// det(A) of the adjacency matrix. Throws std::domain_error on circles.
Rational adjacency_determinant(const MultiGraph& g);

/// det(tI - A) via the Faddeev-LeVerrier recursion. Throws on circles.
Polynomial charpoly_oracle(const MultiGraph& g);

/// Sum over spanning subgraphs whose components are single edges or cycles
/// of (-1)^{#edges} (-2)^{#cycles} t^{#uncovered vertices}. Throws on circles.
GaussianRational sachs_oracle(const MultiGraph& g, const GaussianRational& t);

/// J(G, x): every transition system (unordered pairing of the half-edges at
/// each vertex) weighted by x^{#circuits}; each circle contributes x.
Polynomial circuit_partition_oracle(const MultiGraph& g);

/// Edge subsets with no loop and no two edges sharing a vertex, including
/// the empty one.
std::uint64_t matching_count_oracle(const MultiGraph& g);

/// Sign of the first permutation of the ground set (in lexicographic order)
/// that maps the arc set of `n` onto that of `m`. Throws std::domain_error
/// if no such permutation exists.
int permutation_sign_oracle(const DirectedMatching& m, const DirectedMatching& n);

/// Rank by plain Gaussian elimination with exact inverses.
int gaussian_rank(std::vector<std::vector<GaussianRational>> rows);

}  // namespace mixedpf::oracles
