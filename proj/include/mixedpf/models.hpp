#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "mixedpf/algebra.hpp"

namespace mixedpf {

/// One factor of the wedge argument: f_index, or g_index when `dual` is set.
struct ExtSlot {
  int index = 0;
  bool dual = false;
};

/// Argument of a single vertex factor: a multiset of symmetric colors and an
/// ordered wedge of f/g vectors. All indices are 0-based.
struct LocalEvaluationRequest {
  std::vector<int> sym_colors;
  std::vector<ExtSlot> ext;
};

/// Appends f_index to a sorted wedge held as a bit mask. Returns false when
/// the index is already present (the wedge vanishes); otherwise toggles
/// `negative` by the parity of the transpositions needed to sort.
inline bool wedge_push(std::uint32_t& mask, bool& negative, int index) {
  const std::uint32_t bit = std::uint32_t{1} << index;
  if (mask & bit) return false;
  negative ^= (std::popcount(mask >> index) & 1) != 0;
  mask |= bit;
  return true;
}

/// A (k, 2l)-color edge-coloring model: a finitely supported functional on
/// the basis of S V_k (x) /\ V_{2l}.
///
/// Entries are stored under canonical keys (sorted exterior indices). The
/// model is materialized for symmetric degrees up to `sym_cap`; asking for a
/// larger symmetric degree is a domain error rather than a silent zero.
class EdgeColoringModel {
 public:
  struct Entry {
    SymBasisIndex sym;
    ExtBasisIndex ext;
    GaussianRational value;
  };

  EdgeColoringModel() : EdgeColoringModel(ColorSpace{}, 0) {}
  EdgeColoringModel(ColorSpace space, int sym_cap);

  ColorSpace space() const { return space_; }
  int k() const { return space_.k; }
  int two_ell() const { return space_.two_ell; }
  int ell() const { return space_.ell(); }
  int sym_cap() const { return sym_cap_; }

  /// Stores a value under a canonical key; zero erases the entry.
  void set(const SymBasisIndex& sym, const ExtBasisIndex& ext, const GaussianRational& value);
  /// Stores `value` so that evaluate_local(*this, request) == value. Throws
  /// if the request's wedge vanishes.
  void set_by_request(const LocalEvaluationRequest& request, const GaussianRational& value);

  GaussianRational value(const SymBasisIndex& sym, const ExtBasisIndex& ext) const;
  std::vector<Entry> entries() const;
  std::size_t entry_count() const { return values_.size(); }

  /// Packed symmetric key: sum over colors c of count_c * radix^c.
  std::uint64_t sym_weight(int color) const { return sym_weights_[static_cast<std::size_t>(color)]; }
  std::uint64_t sym_key(const SymBasisIndex& sym) const;
  /// Entry at a packed key, or nullptr when the value is zero.
  const GaussianRational* find(std::uint64_t sym_key, std::uint32_t ext_mask) const {
    const std::uint64_t key = (sym_key << space_.two_ell) | ext_mask;
    if (!dense_.empty()) {
      std::int32_t slot = dense_[key];
      return slot < 0 ? nullptr : &values_[static_cast<std::size_t>(slot)];
    }
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &values_[static_cast<std::size_t>(it->second)];
  }

 private:
  std::uint64_t pack(const SymBasisIndex& sym, const ExtBasisIndex& ext) const;
  void check_sym(const SymBasisIndex& sym) const;

  ColorSpace space_;
  int sym_cap_ = 0;
  std::vector<std::uint64_t> sym_weights_;
  std::vector<GaussianRational> values_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, std::int32_t> index_;
  std::vector<std::int32_t> dense_;
};

/// h(request): dual slots are expanded through dual_basis, the wedge is
/// sorted with its permutation sign, and repeated indices give 0.
/// Throws std::domain_error for out-of-range indices or a symmetric degree
/// above the model's cap.
GaussianRational evaluate_local(const EdgeColoringModel& model, const LocalEvaluationRequest& request);

/// Calls fn(counts) for every vector of k nonnegative counts with sum <= cap.
void for_each_sym_index(int k, int cap, const std::function<void(const SymBasisIndex&)>& fn);

/// (2, 0): 1 on e1^{n1} e2^{n2} with n2 <= 1; its partition function counts matchings.
EdgeColoringModel matchings_model(int sym_cap);
/// (2, 2): h(e1^i (x) f1^g1) = 1, h(e1^i e2) = sqrt(-1), h(e1^i) = t; the
/// partition function is det(tI - A).
EdgeColoringModel charpoly_model(const GaussianRational& t, int sym_cap);
/// (k, 0): h(prod e_i^{a_i}) = prod (a_i - 1)!!; partition function J(G, k).
EdgeColoringModel circuit_pos_model(int k, int sym_cap);
/// (0, 2l): h(/\_{i in S} f_i ^ g_i) = 1 for S a subset of [l]; partition
/// function J(G, -2l).
EdgeColoringModel circuit_neg_model(int ell);
/// h0 (x) h1 for a purely symmetric h0 and a purely exterior h1.
EdgeColoringModel tensor_model(const EdgeColoringModel& sym_part, const EdgeColoringModel& ext_part);
/// circuit_pos(1) (x) circuit_neg(l); partition function J(G, 1 - 2l).
EdgeColoringModel circuit_odd_model(int ell, int sym_cap);

}  // namespace mixedpf
