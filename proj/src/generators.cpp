#include "mixedpf/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace mixedpf::gen {

namespace {

std::vector<Edge> vertex_slots(int n, bool loops) {
  std::vector<Edge> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = loops ? a : a + 1; b < n; ++b) slots.push_back({a, b});
  }
  return slots;
}

// Calls fn for every multiset of slot indices of size <= max_size, built in
// non-decreasing order.
void for_each_multiset(int n_slots, int max_size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int from) {
    fn(chosen);
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (int s = from; s < n_slots; ++s) {
      chosen.push_back(s);
      rec(s);
      chosen.pop_back();
    }
  };
  rec(0);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<MultiGraph> all_simple_graphs(int n) {
  const std::vector<Edge> slots = vertex_slots(n, false);
  if (slots.size() > 30) throw std::domain_error("all_simple_graphs: too many vertices");
  std::vector<MultiGraph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    MultiGraph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((bits >> s) & 1u) g.add_edge(slots[s].a, slots[s].b);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Edge> canonical_edges(const MultiGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  auto less = [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); };
  do {
    std::vector<Edge> mapped;
    for (const Edge& e : g.edges()) {
      const int a = perm[e.a];
      const int b = perm[e.b];
      mapped.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(mapped.begin(), mapped.end(), less);
    if (first || std::lexicographical_compare(mapped.begin(), mapped.end(), best.begin(), best.end(), less)) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<MultiGraph> all_multigraphs(int max_vertices, int max_edges, bool loops) {
  std::vector<MultiGraph> out;
  for (int n = 0; n <= max_vertices; ++n) {
    const std::vector<Edge> slots = vertex_slots(n, loops);
    std::set<std::vector<std::pair<int, int>>> seen;
    for_each_multiset(static_cast<int>(slots.size()), n == 0 ? 0 : max_edges, [&](const std::vector<int>& chosen) {
      MultiGraph g(n);
      for (int s : chosen) g.add_edge(slots[s].a, slots[s].b);
      std::vector<std::pair<int, int>> key;
      for (const Edge& e : canonical_edges(g)) key.emplace_back(e.a, e.b);
      if (seen.insert(key).second) out.push_back(std::move(g));
    });
  }
  return out;
}

MultiGraph random_multigraph(Rng& rng, int max_vertices, int max_edges, bool loops) {
  const int n = uniform(rng, 1, max_vertices);
  int m = uniform(rng, 0, max_edges);
  if (!loops && n == 1) m = 0;
  MultiGraph g(n);
  for (int i = 0; i < m; ++i) {
    const int a = uniform(rng, 0, n - 1);
    int b = uniform(rng, 0, n - 1);
    while (!loops && b == a) b = uniform(rng, 0, n - 1);
    g.add_edge(a, b);
  }
  return g;
}

Fragment random_fragment(Rng& rng, int t, int max_internal, int max_edges) {
  if (max_edges < t) throw std::domain_error("random_fragment: fewer edges than labels");
  int n = uniform(rng, 0, max_internal);
  if (n == 0 && t % 2 != 0) n = 1;

  MultiGraph g(n + t);
  std::vector<bool> done(static_cast<std::size_t>(t), false);
  for (int label = 0; label < t; ++label) {
    if (done[label]) continue;
    done[label] = true;
    std::vector<int> partners;
    for (int j = label + 1; j < t; ++j) {
      if (!done[j]) partners.push_back(j);
    }
    const bool pair_up = !partners.empty() && (n == 0 || uniform(rng, 0, 2) == 0);
    if (pair_up) {
      const int j = partners[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(partners.size()) - 1))];
      done[j] = true;
      g.add_edge(n + label, n + j);
    } else {
      g.add_edge(n + label, uniform(rng, 0, n - 1));
    }
  }
  if (n > 0) {
    const int extra = uniform(rng, 0, max_edges - g.edge_count());
    for (int i = 0; i < extra; ++i) g.add_edge(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  }
  std::vector<int> labeled(static_cast<std::size_t>(t));
  std::iota(labeled.begin(), labeled.end(), n);
  return Fragment(std::move(g), std::move(labeled));
}

EdgeColoringModel random_sparse_model(Rng& rng, ColorSpace space, int cap, double density) {
  EdgeColoringModel h(space, cap);
  std::bernoulli_distribution keep(density);
  const std::uint32_t masks = std::uint32_t{1} << space.two_ell;
  for_each_sym_index(space.k, space.k == 0 ? 0 : cap, [&](const SymBasisIndex& sym) {
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      if (!keep(rng)) continue;
      int re = 0;
      int im = 0;
      while (re == 0 && im == 0) {
        re = uniform(rng, -2, 2);
        im = uniform(rng, 0, 3) == 0 ? uniform(rng, -1, 1) : 0;
      }
      h.set(sym, ExtBasisIndex::from_mask(mask), GaussianRational(Rational(re), Rational(im)));
    }
  });
  return h;
}

std::vector<Fragment> all_fragments(int t, int max_internal, int max_edges, std::size_t limit) {
  std::vector<Fragment> out;
  auto full = [&] { return limit > 0 && out.size() >= limit; };
  for (int n = 0; n <= max_internal && !full(); ++n) {
    const std::vector<Edge> slots = vertex_slots(n, true);
    // target[label]: internal vertex in [0, n), or n + j for the label j it is paired with.
    std::vector<int> target(static_cast<std::size_t>(t), -1);
    std::function<void(int)> attach = [&](int label) {
      if (full()) return;
      if (label == t) {
        MultiGraph base(n + t);
        for (int i = 0; i < t; ++i) {
          if (target[i] < n) {
            base.add_edge(n + i, target[i]);
          } else if (target[i] - n > i) {
            base.add_edge(n + i, target[i]);
          }
        }
        const int budget = max_edges - base.edge_count();
        if (budget < 0) return;
        std::vector<int> labeled(static_cast<std::size_t>(t));
        std::iota(labeled.begin(), labeled.end(), n);
        for_each_multiset(static_cast<int>(slots.size()), budget, [&](const std::vector<int>& chosen) {
          if (full()) return;
          MultiGraph g = base;
          for (int s : chosen) g.add_edge(slots[s].a, slots[s].b);
          out.emplace_back(std::move(g), labeled);
        });
        return;
      }
      if (target[label] >= 0) {
        attach(label + 1);
        return;
      }
      for (int v = 0; v < n; ++v) {
        target[label] = v;
        attach(label + 1);
      }
      for (int j = label + 1; j < t; ++j) {
        if (target[j] >= 0) continue;
        target[label] = n + j;
        target[j] = n + label;
        attach(label + 1);
        target[j] = -1;
      }
      target[label] = -1;
    };
    attach(0);
  }
  return out;
}

}  // namespace mixedpf::gen
