#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mixedpf/evaluator.hpp"
#include "mixedpf/graph.hpp"
#include "mixedpf/models.hpp"

namespace mixedpf {

/// Directed perfect matching; the ground set is the set of arc endpoints.
struct DirectedMatching {
  std::vector<std::pair<int, int>> arcs;

  std::vector<int> ground_set() const;
  /// Throws std::domain_error if some element occurs in two arcs or an arc is a loop.
  void validate() const;
};

/// Sign of any permutation sending `n` onto `m`, computed without search as
/// (-1)^{c + o}: c counts the components of the union and o is
/// the parity of arcs that must be flipped to make the union Eulerian.
/// Throws std::domain_error when the ground sets differ.
int matching_sign(const DirectedMatching& m, const DirectedMatching& n);

/// matching_sign against (i1, i2), (i3, i4), ... on the sorted ground set.
int canonical_matching_sign(const DirectedMatching& m);

/// Coefficients over the basis of V_{k,2l}^{(x) t}. Label 1 is the most
/// significant slot of the flat index.
struct FragmentTensor {
  ColorSpace space;
  int t = 0;
  std::vector<GaussianRational> coeffs;

  FragmentTensor(ColorSpace s, int slots);
  std::size_t flat_index(const std::vector<int>& slots) const;
  bool is_zero() const;
};

/// t_h(F, H, omega, kappa): the signed, consistently colored sum of vertex
/// products over unlabeled vertices, tagged at each label by e_c (label not
/// in S(H)), f_c (edge enters the label) or g_c (edge leaves the label). The
/// prefactor (-1)^{|S|/4} is taken as i^{|S|/2}. Circles of F are ignored.
/// Throws std::domain_error for an invalid state.
FragmentTensor fragment_tensor(const Fragment& fragment, EdgeSet subset, const EdgeColoringModel& h,
                               const EulerianState& state);

/// Sum of fragment_tensor over all Eulerian subsets (seed-0 states), times
/// (k - 2l) per circle of the fragment.
FragmentTensor fragment_tensor_sum(const Fragment& fragment, const EdgeColoringModel& h);

/// The form [.,.] applied slot by slot. Throws std::domain_error on a shape mismatch.
GaussianRational gram_pairing(const FragmentTensor& a, const FragmentTensor& b);

/// Labels (0-based) whose open end lies in `subset`.
std::vector<int> touched_labels(const Fragment& fragment, EdgeSet subset);

/// s_h(F1 * F2, H1 * H2) with the circles created by the gluing counted as
/// -2l when they lie in the subset and k otherwise.
GaussianRational glued_subset_value(const Fragment& first, EdgeSet first_subset, const Fragment& second,
                                    EdgeSet second_subset, const EdgeColoringModel& h);

struct ConnectionMatrix {
  int t = 0;
  std::vector<Fragment> fragments;
  std::vector<std::vector<GaussianRational>> entries;

  std::size_t size() const { return fragments.size(); }
};

/// M(F_i, F_j) = p_h(F_i * F_j); entries are computed in parallel.
/// Throws std::domain_error if the fragments do not share t.
ConnectionMatrix connection_matrix(const std::vector<Fragment>& fragments, const EdgeColoringModel& h, Mode mode);

/// Rank over Q(i) by fraction-free elimination.
int exact_rank(std::vector<std::vector<GaussianRational>> rows);
inline int exact_rank(const ConnectionMatrix& m) { return exact_rank(m.entries); }

/// Signed sum over permutations pi of {0..k} of sgn(pi) f(G_pi).
GaussianRational dglrs_constraint_sum(const std::function<GaussianRational(const MultiGraph&)>& f, int k);

}  // namespace mixedpf
