#include "mixedpf/models.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace mixedpf {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 18;

}  // namespace

EdgeColoringModel::EdgeColoringModel(ColorSpace space, int sym_cap) : space_(space), sym_cap_(sym_cap) {
  if (space.k < 0 || space.two_ell < 0 || space.two_ell % 2 != 0) {
    throw std::domain_error("EdgeColoringModel: need k >= 0 and even 2l >= 0");
  }
  if (space.two_ell > 30) throw std::domain_error("EdgeColoringModel: 2l > 30 not supported");
  if (sym_cap < 0) throw std::domain_error("EdgeColoringModel: negative degree cap");

  // Key space is (cap + 1)^k * 2^{2l}; it has to fit in 64 bits.
  const std::uint64_t radix = static_cast<std::uint64_t>(sym_cap) + 1;
  std::uint64_t size = std::uint64_t{1} << space.two_ell;
  std::uint64_t w = 1;
  for (int c = 0; c < space.k; ++c) {
    sym_weights_.push_back(w);
    if (size > std::numeric_limits<std::uint64_t>::max() / radix) {
      throw std::domain_error("EdgeColoringModel: key space too large for k = " + std::to_string(space.k) +
                              ", cap = " + std::to_string(sym_cap));
    }
    size *= radix;
    w *= radix;
  }
  if (size <= kDenseLimit) dense_.assign(size, -1);
}

void EdgeColoringModel::check_sym(const SymBasisIndex& sym) const {
  if (static_cast<int>(sym.counts.size()) != space_.k) {
    throw std::domain_error("EdgeColoringModel: symmetric index has wrong length");
  }
  for (int c : sym.counts) {
    if (c < 0) throw std::domain_error("EdgeColoringModel: negative symmetric count");
  }
  if (sym.degree() > sym_cap_) {
    throw std::domain_error("EdgeColoringModel: symmetric degree " + std::to_string(sym.degree()) +
                            " exceeds the model's cap " + std::to_string(sym_cap_));
  }
}

std::uint64_t EdgeColoringModel::sym_key(const SymBasisIndex& sym) const {
  check_sym(sym);
  std::uint64_t key = 0;
  for (int c = 0; c < space_.k; ++c) key += static_cast<std::uint64_t>(sym.counts[c]) * sym_weights_[c];
  return key;
}

std::uint64_t EdgeColoringModel::pack(const SymBasisIndex& sym, const ExtBasisIndex& ext) const {
  for (std::size_t i = 0; i < ext.indices.size(); ++i) {
    if (ext.indices[i] < 0 || ext.indices[i] >= space_.two_ell || (i > 0 && ext.indices[i] <= ext.indices[i - 1])) {
      throw std::domain_error("EdgeColoringModel: exterior index must be strictly increasing in [0, 2l)");
    }
  }
  return (sym_key(sym) << space_.two_ell) | ext.mask();
}

void EdgeColoringModel::set(const SymBasisIndex& sym, const ExtBasisIndex& ext, const GaussianRational& value) {
  const std::uint64_t key = pack(sym, ext);
  auto it = index_.find(key);
  if (it != index_.end()) {
    if (!value.is_zero()) {
      values_[static_cast<std::size_t>(it->second)] = value;
      return;
    }
    // Erase by moving the last entry into the vacated slot.
    const std::int32_t slot = it->second;
    const std::int32_t last = static_cast<std::int32_t>(values_.size()) - 1;
    index_.erase(it);
    if (!dense_.empty()) dense_[key] = -1;
    if (slot != last) {
      values_[slot] = std::move(values_[last]);
      keys_[slot] = keys_[last];
      index_[keys_[slot]] = slot;
      if (!dense_.empty()) dense_[keys_[slot]] = slot;
    }
    values_.pop_back();
    keys_.pop_back();
    return;
  }
  if (value.is_zero()) return;
  const auto slot = static_cast<std::int32_t>(values_.size());
  values_.push_back(value);
  keys_.push_back(key);
  index_.emplace(key, slot);
  if (!dense_.empty()) dense_[key] = slot;
}

namespace {

struct NormalizedRequest {
  SymBasisIndex sym;
  std::uint32_t mask = 0;
  bool negative = false;
  bool vanishes = false;
};

NormalizedRequest normalize(const EdgeColoringModel& model, const LocalEvaluationRequest& request) {
  NormalizedRequest out;
  out.sym.counts.assign(static_cast<std::size_t>(model.k()), 0);
  for (int c : request.sym_colors) {
    if (c < 0 || c >= model.k()) {
      throw std::domain_error("evaluate_local: symmetric color " + std::to_string(c) + " out of range");
    }
    ++out.sym.counts[c];
  }
  for (const ExtSlot& slot : request.ext) {
    int index = slot.index;
    if (index < 0 || index >= model.two_ell()) {
      throw std::domain_error("evaluate_local: exterior index " + std::to_string(index) + " out of range");
    }
    if (slot.dual) {
      SignedIndex g = dual_basis(index, model.ell());
      out.negative ^= g.sign < 0;
      index = g.index;
    }
    if (!out.vanishes && !wedge_push(out.mask, out.negative, index)) out.vanishes = true;
  }
  return out;
}

}  // namespace

void EdgeColoringModel::set_by_request(const LocalEvaluationRequest& request, const GaussianRational& value) {
  NormalizedRequest n = normalize(*this, request);
  if (n.vanishes) throw std::domain_error("set_by_request: wedge with a repeated index is zero");
  GaussianRational v = value;
  v.negate_if(n.negative);
  set(n.sym, ExtBasisIndex::from_mask(n.mask), v);
}

GaussianRational EdgeColoringModel::value(const SymBasisIndex& sym, const ExtBasisIndex& ext) const {
  pack(sym, ext);  // validates both parts
  const GaussianRational* v = find(sym_key(sym), ext.mask());
  return v ? *v : GaussianRational();
}

std::vector<EdgeColoringModel::Entry> EdgeColoringModel::entries() const {
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  for (std::size_t i = 0; i < keys_.size(); ++i) order.emplace_back(keys_[i], i);
  std::sort(order.begin(), order.end());
  const std::uint64_t radix = static_cast<std::uint64_t>(sym_cap_) + 1;
  std::vector<Entry> out;
  for (auto [key, i] : order) {
    Entry e;
    e.ext = ExtBasisIndex::from_mask(static_cast<std::uint32_t>(key & ((std::uint64_t{1} << space_.two_ell) - 1)));
    std::uint64_t sym = key >> space_.two_ell;
    for (int c = 0; c < space_.k; ++c) {
      e.sym.counts.push_back(static_cast<int>(sym % radix));
      sym /= radix;
    }
    e.value = values_[i];
    out.push_back(std::move(e));
  }
  return out;
}

GaussianRational evaluate_local(const EdgeColoringModel& model, const LocalEvaluationRequest& request) {
  NormalizedRequest n = normalize(model, request);
  if (n.vanishes) return {};
  const GaussianRational* v = model.find(model.sym_key(n.sym), n.mask);
  if (v == nullptr) return {};
  GaussianRational out = *v;
  out.negate_if(n.negative);
  return out;
}

void for_each_sym_index(int k, int cap, const std::function<void(const SymBasisIndex&)>& fn) {
  SymBasisIndex idx;
  idx.counts.assign(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int c, int left) {
    if (c == k) {
      fn(idx);
      return;
    }
    for (int n = 0; n <= left; ++n) {
      idx.counts[c] = n;
      rec(c + 1, left - n);
    }
    idx.counts[c] = 0;
  };
  rec(0, cap);
}

EdgeColoringModel matchings_model(int sym_cap) {
  EdgeColoringModel h({2, 0}, sym_cap);
  for_each_sym_index(2, sym_cap, [&](const SymBasisIndex& s) {
    if (s.counts[1] <= 1) h.set(s, {}, 1);
  });
  return h;
}

EdgeColoringModel charpoly_model(const GaussianRational& t, int sym_cap) {
  EdgeColoringModel h({2, 2}, sym_cap);
  for (int i = 0; i <= sym_cap; ++i) {
    LocalEvaluationRequest cycle{std::vector<int>(static_cast<std::size_t>(i), 0), {{0, false}, {0, true}}};
    h.set_by_request(cycle, 1);
    h.set({{i, 0}}, {}, t);
    if (i + 1 <= sym_cap) h.set({{i, 1}}, {}, GaussianRational::imaginary_unit());
  }
  return h;
}

EdgeColoringModel circuit_pos_model(int k, int sym_cap) {
  if (k < 1) throw std::domain_error("circuit_pos_model: k >= 1 required");
  EdgeColoringModel h({k, 0}, sym_cap);
  for_each_sym_index(k, sym_cap, [&](const SymBasisIndex& s) {
    long v = 1;
    for (int a : s.counts) v *= double_factorial_odd(a - 1);
    if (v != 0) h.set(s, {}, v);
  });
  return h;
}

EdgeColoringModel circuit_neg_model(int ell) {
  if (ell < 1) throw std::domain_error("circuit_neg_model: l >= 1 required");
  EdgeColoringModel h({0, 2 * ell}, 0);
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << ell); ++subset) {
    LocalEvaluationRequest r;
    for (int i = 0; i < ell; ++i) {
      if ((subset >> i) & 1u) {
        r.ext.push_back({i, false});
        r.ext.push_back({i, true});
      }
    }
    h.set_by_request(r, 1);
  }
  return h;
}

EdgeColoringModel tensor_model(const EdgeColoringModel& sym_part, const EdgeColoringModel& ext_part) {
  if (sym_part.two_ell() != 0 || ext_part.k() != 0) {
    throw std::domain_error("tensor_model: need a (k, 0) model and a (0, 2l) model");
  }
  EdgeColoringModel h({sym_part.k(), ext_part.two_ell()}, sym_part.sym_cap());
  for (const auto& a : sym_part.entries()) {
    for (const auto& b : ext_part.entries()) {
      h.set(a.sym, b.ext, a.value * b.value);
    }
  }
  return h;
}

EdgeColoringModel circuit_odd_model(int ell, int sym_cap) {
  return tensor_model(circuit_pos_model(1, sym_cap), circuit_neg_model(ell));
}

}  // namespace mixedpf
