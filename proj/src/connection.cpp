#include "mixedpf/connection.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coloring_kernel.hpp"

namespace mixedpf {

std::vector<int> DirectedMatching::ground_set() const {
  std::vector<int> out;
  for (auto [a, b] : arcs) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void DirectedMatching::validate() const {
  auto g = ground_set();
  if (std::adjacent_find(g.begin(), g.end()) != g.end()) {
    throw std::domain_error("DirectedMatching: element covered twice");
  }
}

int matching_sign(const DirectedMatching& m, const DirectedMatching& n) {
  m.validate();
  n.validate();
  if (m.ground_set() != n.ground_set()) throw std::domain_error("matching_sign: ground sets differ");

  // For each element: its partner under each matching and whether it is the tail.
  struct Arc {
    int partner;
    bool tail;
  };
  std::map<int, Arc> in_m;
  std::map<int, Arc> in_n;
  for (auto [a, b] : m.arcs) {
    in_m[a] = {b, true};
    in_m[b] = {a, false};
  }
  for (auto [a, b] : n.arcs) {
    in_n[a] = {b, true};
    in_n[b] = {a, false};
  }

  int components = 0;
  int against = 0;
  std::map<int, bool> seen;
  for (const auto& [start, unused] : in_m) {
    if (seen[start]) continue;
    ++components;
    int cur = start;
    do {
      seen[cur] = true;
      const Arc& am = in_m.at(cur);
      against += am.tail ? 0 : 1;
      cur = am.partner;
      seen[cur] = true;
      const Arc& an = in_n.at(cur);
      against += an.tail ? 0 : 1;
      cur = an.partner;
    } while (cur != start);
  }
  return (components + against) % 2 == 0 ? 1 : -1;
}

int canonical_matching_sign(const DirectedMatching& m) {
  auto g = m.ground_set();
  DirectedMatching canonical;
  for (std::size_t i = 0; i + 1 < g.size(); i += 2) canonical.arcs.emplace_back(g[i], g[i + 1]);
  return matching_sign(canonical, m);
}

FragmentTensor::FragmentTensor(ColorSpace s, int slots) : space(s), t(slots) {
  std::size_t size = 1;
  for (int i = 0; i < slots; ++i) size *= static_cast<std::size_t>(s.dimension());
  coeffs.assign(size, GaussianRational());
}

std::size_t FragmentTensor::flat_index(const std::vector<int>& slots) const {
  std::size_t idx = 0;
  for (int s : slots) idx = idx * static_cast<std::size_t>(space.dimension()) + static_cast<std::size_t>(s);
  return idx;
}

bool FragmentTensor::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

std::vector<int> touched_labels(const Fragment& fragment, EdgeSet subset) {
  std::vector<int> out;
  for (int label = 0; label < fragment.t(); ++label) {
    if (subset.contains(fragment.open_end(label))) out.push_back(label);
  }
  return out;
}

FragmentTensor fragment_tensor(const Fragment& fragment, EdgeSet subset, const EdgeColoringModel& h,
                               const EulerianState& state) {
  if (state.subset != subset) throw std::domain_error("fragment_tensor: state belongs to a different subset");
  validate_state(fragment, state);
  const MultiGraph& g = fragment.graph();
  const ColorSpace space = h.space();
  const int t = fragment.t();
  FragmentTensor out(space, t);

  std::vector<bool> has_factor(static_cast<std::size_t>(g.vertex_count()), true);
  for (int v : fragment.labeled()) has_factor[v] = false;

  // Per label: the edge, and how its color maps to a basis slot.
  struct LabelSlot {
    int edge;
    bool in_subset;
    bool incoming;
  };
  std::vector<LabelSlot> label_slots;
  for (int label = 0; label < t; ++label) {
    const int e = fragment.open_end(label);
    const int v = fragment.labeled()[label];
    const HalfEdge at_label{e, g.edge(e).a == v ? 0 : 1};
    label_slots.push_back({e, subset.contains(e), subset.contains(e) && !state.is_outgoing(at_label)});
  }

  detail::ColoringKernel kernel(g, has_factor, state, h);
  std::vector<int> slots(static_cast<std::size_t>(t));
  kernel.run_all([&](const std::vector<int>& colors, const GaussianRational& product) {
    bool negative = false;
    for (int label = 0; label < t; ++label) {
      const LabelSlot& ls = label_slots[label];
      const int c = colors[ls.edge];
      if (!ls.in_subset) {
        slots[label] = c;
      } else if (ls.incoming) {
        slots[label] = space.k + c;
      } else {
        const SignedIndex gi = dual_basis(c, space.ell());
        negative ^= gi.sign < 0;
        slots[label] = space.k + gi.index;
      }
    }
    GaussianRational& coeff = out.coeffs[out.flat_index(slots)];
    if (negative) {
      coeff -= product;
    } else {
      coeff += product;
    }
  });

  const Decomposition dec = decompose(state, fragment);
  DirectedMatching trails;
  trails.arcs = dec.trails;
  const int s_size = static_cast<int>(touched_labels(fragment, subset).size());
  GaussianRational prefactor = i_power(s_size / 2);
  prefactor.negate_if((dec.circuits % 2 != 0) != (canonical_matching_sign(trails) < 0));
  if (!(prefactor == GaussianRational(1))) {
    for (auto& c : out.coeffs) c *= prefactor;
  }
  return out;
}

FragmentTensor fragment_tensor_sum(const Fragment& fragment, const EdgeColoringModel& h) {
  FragmentTensor out(h.space(), fragment.t());
  for (EdgeSet subset : enumerate_eulerian_subsets(fragment)) {
    FragmentTensor part = fragment_tensor(fragment, subset, h, eulerian_state(fragment, subset, 0));
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += part.coeffs[i];
  }
  const int circles = fragment.graph().circle_count();
  if (circles > 0) {
    const GaussianRational circle = circle_value(h, Mode::kMixed);
    for (int c = 0; c < circles; ++c) {
      for (auto& coeff : out.coeffs) coeff *= circle;
    }
  }
  return out;
}

GaussianRational gram_pairing(const FragmentTensor& a, const FragmentTensor& b) {
  if (!(a.space == b.space) || a.t != b.t || a.coeffs.size() != b.coeffs.size()) {
    throw std::domain_error("gram_pairing: tensors have different shapes");
  }
  const ColorSpace space = a.space;
  const auto dim = static_cast<std::size_t>(space.dimension());
  // Each basis vector pairs nontrivially with exactly one basis vector.
  std::vector<std::size_t> partner(dim);
  std::vector<int> sign(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      int s = super_form_on_basis(space, static_cast<int>(x), static_cast<int>(y));
      if (s != 0) {
        partner[x] = y;
        sign[x] = s;
      }
    }
  }
  GaussianRational acc;
  std::vector<std::size_t> digits(static_cast<std::size_t>(a.t));
  for (std::size_t idx = 0; idx < a.coeffs.size(); ++idx) {
    if (a.coeffs[idx].is_zero()) continue;
    std::size_t rest = idx;
    std::size_t other = 0;
    std::size_t place = 1;
    bool negative = false;
    for (int s = 0; s < a.t; ++s) {
      const std::size_t d = rest % dim;
      rest /= dim;
      other += partner[d] * place;
      place *= dim;
      negative ^= sign[d] < 0;
    }
    if (b.coeffs[other].is_zero()) continue;
    GaussianRational term = a.coeffs[idx] * b.coeffs[other];
    term.negate_if(negative);
    acc += term;
  }
  return acc;
}

GaussianRational glued_subset_value(const Fragment& first, EdgeSet first_subset, const Fragment& second,
                                    EdgeSet second_subset, const EdgeColoringModel& h) {
  const GlueResult glued = glue_tracked(first, second);
  EdgeSet subset;
  std::vector<bool> circle_in(static_cast<std::size_t>(glued.graph.circle_count()), false);
  auto collect = [&](EdgeSet part, const std::vector<GluedEdgeRef>& refs) {
    for (int e : part.to_vector()) {
      const GluedEdgeRef& r = refs[e];
      if (r.kind == GluedEdgeRef::Kind::kEdge) {
        subset.insert(r.index);
      } else {
        circle_in[r.index] = true;
      }
    }
  };
  collect(first_subset, glued.from_first);
  collect(second_subset, glued.from_second);

  GaussianRational value = s_h(glued.graph, subset, h, eulerian_state(glued.graph, subset, 0));
  for (int c = 0; c < glued.graph.circle_count(); ++c) {
    if (c < glued.first_new_circle) {
      value *= circle_value(h, Mode::kMixed);
    } else {
      value *= circle_in[c] ? GaussianRational(-h.two_ell()) : GaussianRational(h.k());
    }
  }
  return value;
}

ConnectionMatrix connection_matrix(const std::vector<Fragment>& fragments, const EdgeColoringModel& h, Mode mode) {
  ConnectionMatrix out;
  out.t = fragments.empty() ? 0 : fragments.front().t();
  for (const Fragment& f : fragments) {
    if (f.t() != out.t) throw std::domain_error("connection_matrix: fragments do not share t");
  }
  check_mode(h, mode);
  out.fragments = fragments;
  const std::size_t n = fragments.size();
  out.entries.assign(n, std::vector<GaussianRational>(n));

  std::exception_ptr error;
  const auto cells = static_cast<std::int64_t>(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t cell = 0; cell < cells; ++cell) {
    const auto i = static_cast<std::size_t>(cell) / n;
    const auto j = static_cast<std::size_t>(cell) % n;
    try {
      out.entries[i][j] = partition_function(glue(fragments[i], fragments[j]), h, mode).value;
    } catch (...) {
#pragma omp critical(mixedpf_connection_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

int exact_rank(std::vector<std::vector<GaussianRational>> rows) {
  const std::size_t n_rows = rows.size();
  if (n_rows == 0) return 0;
  const std::size_t n_cols = rows.front().size();
  std::size_t rank = 0;
  GaussianRational previous = 1;
  for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_rows && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(rows[rank], rows[pivot]);
    const GaussianRational p = rows[rank][col];
    for (std::size_t r = rank + 1; r < n_rows; ++r) {
      const GaussianRational factor = rows[r][col];
      for (std::size_t c = col; c < n_cols; ++c) {
        rows[r][c] = (p * rows[r][c] - factor * rows[rank][c]) / previous;
      }
    }
    previous = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

GaussianRational dglrs_constraint_sum(const std::function<GaussianRational(const MultiGraph&)>& f, int k) {
  if (k < 0) throw std::domain_error("dglrs_constraint_sum: k < 0");
  std::vector<int> perm(static_cast<std::size_t>(k + 1));
  std::iota(perm.begin(), perm.end(), 0);
  GaussianRational sum;
  do {
    GaussianRational term = f(build_g_pi(k, perm));
    term.negate_if(permutation_sign(perm) < 0);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace mixedpf
