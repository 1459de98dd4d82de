#include "mixedpf/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mixedpf/algebra.hpp"

namespace mixedpf::oracles {

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(int degree, GaussianRational c) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

namespace {

void reject_circles(const MultiGraph& g, const char* who) {
  if (g.circle_count() > 0) throw std::domain_error(std::string(who) + ": graph has circle components");
}

}  // namespace

std::vector<std::vector<Rational>> adjacency_matrix(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      a[e.a][e.a] += 2;
    } else {
      a[e.a][e.b] += 1;
      a[e.b][e.a] += 1;
    }
  }
  return a;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Rational adjacency_determinant(const MultiGraph& g) {
  reject_circles(g, "adjacency_determinant");
  return determinant(adjacency_matrix(g));
}

Polynomial charpoly_oracle(const MultiGraph& g) {
  reject_circles(g, "charpoly_oracle");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto a = adjacency_matrix(g);
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * next[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
    mk = std::move(next);
  }
  std::vector<GaussianRational> coeffs;
  for (const Rational& x : c) coeffs.emplace_back(x);
  return Polynomial(std::move(coeffs));
}

GaussianRational sachs_oracle(const MultiGraph& g, const GaussianRational& t) {
  reject_circles(g, "sachs_oracle");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 30) throw std::domain_error("sachs_oracle: too many edges");
  GaussianRational total;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int e = 0; e < m; ++e) {
      if (!((bits >> e) & 1u)) continue;
      const Edge& ed = g.edge(e);
      ++deg[ed.a];
      ++deg[ed.b];
      parent[find(ed.a)] = find(ed.b);
    }
    // Per component: vertex count, edge count, max degree.
    std::vector<int> verts(static_cast<std::size_t>(n), 0);
    std::vector<int> edges(static_cast<std::size_t>(n), 0);
    std::vector<int> max_deg(static_cast<std::size_t>(n), 0);
    int covered = 0;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 0) continue;
      ++covered;
      int r = find(v);
      ++verts[r];
      max_deg[r] = std::max(max_deg[r], deg[v]);
    }
    for (int e = 0; e < m; ++e) {
      if ((bits >> e) & 1u) ++edges[find(g.edge(e).a)];
    }
    bool ok = true;
    int single_edges = 0;
    int cycles = 0;
    for (int r = 0; r < n && ok; ++r) {
      if (verts[r] == 0) continue;
      if (edges[r] == 1 && verts[r] == 2) {
        ++single_edges;
      } else if (max_deg[r] == 2 && edges[r] == verts[r]) {
        // Connected, all degrees 2: a cycle (loops and 2-cycles included).
        ++cycles;
      } else {
        ok = false;
      }
    }
    if (!ok) continue;
    GaussianRational term = 1;
    for (int i = 0; i < n - covered; ++i) term *= t;
    for (int i = 0; i < cycles; ++i) term *= GaussianRational(-2);
    term.negate_if(single_edges % 2 != 0);
    total += term;
  }
  return total;
}

Polynomial circuit_partition_oracle(const MultiGraph& g) {
  if (!g.is_eulerian()) return {};
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::vector<int>> halves(static_cast<std::size_t>(n));  // half-edge id = 2e + side
  for (int e = 0; e < m; ++e) {
    halves[g.edge(e).a].push_back(2 * e);
    halves[g.edge(e).b].push_back(2 * e + 1);
  }
  std::vector<int> mate(static_cast<std::size_t>(2 * m), -1);
  std::vector<GaussianRational> counts(static_cast<std::size_t>(m) + 1);

  auto count_circuits = [&] {
    std::vector<bool> seen(static_cast<std::size_t>(2 * m), false);
    int circuits = 0;
    for (int h = 0; h < 2 * m; ++h) {
      if (seen[h]) continue;
      ++circuits;
      int x = h;
      while (!seen[x]) {
        seen[x] = true;
        seen[x ^ 1] = true;
        x = mate[x ^ 1];
      }
    }
    return circuits;
  };

  // Pair up the free half-edges of vertex v, then move on.
  std::function<void(int)> at_vertex = [&](int v) {
    if (v == n) {
      counts[count_circuits()] += 1;
      return;
    }
    const auto& hs = halves[v];
    auto first_free = std::find_if(hs.begin(), hs.end(), [&](int h) { return mate[h] < 0; });
    if (first_free == hs.end()) {
      at_vertex(v + 1);
      return;
    }
    for (auto it = first_free + 1; it != hs.end(); ++it) {
      if (mate[*it] >= 0) continue;
      mate[*first_free] = *it;
      mate[*it] = *first_free;
      at_vertex(v);
      mate[*first_free] = -1;
      mate[*it] = -1;
    }
  };
  at_vertex(0);

  Polynomial out(counts);
  return out * Polynomial::monomial(g.circle_count());
}

std::uint64_t matching_count_oracle(const MultiGraph& g) {
  const int m = g.edge_count();
  if (m > 40) throw std::domain_error("matching_count_oracle: too many edges");
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!((bits >> e) & 1u)) continue;
      const Edge& ed = g.edge(e);
      if (ed.is_loop() || used[ed.a] || used[ed.b]) {
        ok = false;
      } else {
        used[ed.a] = used[ed.b] = true;
      }
    }
    if (ok) ++count;
  }
  return count;
}

int permutation_sign_oracle(const DirectedMatching& m, const DirectedMatching& n) {
  const std::vector<int> ground = m.ground_set();
  if (ground != n.ground_set()) throw std::domain_error("permutation_sign_oracle: ground sets differ");
  std::set<std::pair<int, int>> target(m.arcs.begin(), m.arcs.end());
  auto position = [&](int x) {
    return static_cast<int>(std::lower_bound(ground.begin(), ground.end(), x) - ground.begin());
  };
  std::vector<int> perm(ground.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool maps = true;
    for (auto [a, b] : n.arcs) {
      if (!target.count({ground[perm[position(a)]], ground[perm[position(b)]]})) {
        maps = false;
        break;
      }
    }
    if (maps) return permutation_sign(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::domain_error("permutation_sign_oracle: no permutation maps one matching onto the other");
}

int gaussian_rank(std::vector<std::vector<GaussianRational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t n_cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const GaussianRational inv = GaussianRational(1) / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const GaussianRational factor = rows[r][col];
      for (std::size_t c = col; c < n_cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace mixedpf::oracles
