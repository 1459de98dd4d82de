#include "mixedpf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mixedpf/connection.hpp"
#include "mixedpf/generators.hpp"
#include "mixedpf/oracles.hpp"

namespace mixedpf::verify {

namespace {

struct Task {
  std::string id;
  Fields inputs;
  std::function<bool(Fields&)> run;
};

std::string padded(std::size_t i, int width = 4) {
  std::ostringstream os;
  os << std::setw(width) << std::setfill('0') << i;
  return os.str();
}

std::string describe(const MultiGraph& g) {
  std::string out = "v=" + std::to_string(g.vertex_count()) + " e=[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(g.edges()[i].a) + '-' + std::to_string(g.edges()[i].b);
  }
  out += ']';
  if (g.circle_count() > 0) out += " c=" + std::to_string(g.circle_count());
  return out;
}

std::string describe(const Fragment& f) {
  std::string out = describe(f.graph()) + " l=[";
  for (std::size_t i = 0; i < f.labeled().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(f.labeled()[i]);
  }
  return out + ']';
}

std::string describe(const EdgeColoringModel& h) {
  std::string out = "k=" + std::to_string(h.k()) + " 2l=" + std::to_string(h.two_ell()) + " {";
  bool first = true;
  for (const auto& e : h.entries()) {
    if (!first) out += ' ';
    first = false;
    out += '(';
    for (std::size_t i = 0; i < e.sym.counts.size(); ++i) out += (i ? "," : "") + std::to_string(e.sym.counts[i]);
    out += '|';
    for (std::size_t i = 0; i < e.ext.indices.size(); ++i) out += (i ? "," : "") + std::to_string(e.ext.indices[i] + 1);
    out += ")=" + e.value.to_string();
  }
  return out + '}';
}

std::string str(const GaussianRational& z) { return z.to_string(); }

int cap_for(const MultiGraph& g) { return std::max(1, g.max_degree()); }

int option(int value, int fallback) { return value >= 0 ? value : fallback; }

std::vector<CaseResult> run_tasks(std::vector<Task>& tasks) {
  std::vector<CaseResult> results(tasks.size());
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    Task& task = tasks[static_cast<std::size_t>(i)];
    CaseResult& r = results[static_cast<std::size_t>(i)];
    r.id = task.id;
    r.inputs = task.inputs;
    try {
      r.pass = task.run(r.values);
    } catch (const std::exception& e) {
      r.values.emplace_back("error", e.what());
      r.pass = false;
    }
  }
  std::sort(results.begin(), results.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  return results;
}

// circle: the vertexless circle component in every mode that fits the model.
std::vector<Task> circle_suite(const SuiteOptions& o, Fields& params) {
  params.emplace_back("spaces", "(1,0) (0,2) (1,2) (2,2) (2,4)");
  gen::Rng rng(o.seed);
  std::vector<Task> tasks;
  const std::vector<ColorSpace> spaces = {{1, 0}, {0, 2}, {1, 2}, {2, 2}, {2, 4}};
  for (const ColorSpace& space : spaces) {
    const EdgeColoringModel h = gen::random_sparse_model(rng, space, 0, 0.5);
    for (Mode mode : {Mode::kOrdinary, Mode::kSkew, Mode::kMixed}) {
      if ((mode == Mode::kOrdinary && space.two_ell != 0) || (mode == Mode::kSkew && space.k != 0)) continue;
      const GaussianRational expected =
          mode == Mode::kOrdinary ? space.k : mode == Mode::kSkew ? -space.two_ell : space.k - space.two_ell;
      for (int circles = 1; circles <= 2; ++circles) {
        const std::string id = "k" + std::to_string(space.k) + "-2l" + std::to_string(space.two_ell) + "-" +
                               std::string(to_string(mode)) + "-c" + std::to_string(circles);
        tasks.push_back({id, {{"graph", describe(MultiGraph(0, {}, circles))}, {"mode", std::string(to_string(mode))}},
                         [=](Fields& out) {
                           const GaussianRational value = partition_function(MultiGraph(0, {}, circles), h, mode).value;
                           GaussianRational want = 1;
                           for (int c = 0; c < circles; ++c) want *= expected;
                           out = {{"engine", str(value)}, {"expected", str(want)}};
                           return value == want;
                         }});
      }
    }
  }
  return tasks;
}

// matchings: ordinary matchings model against subset enumeration.
std::vector<Task> matchings_suite(const SuiteOptions& o, Fields& params) {
  const int max_vertices = option(o.max_vertices, 5);
  const int max_edges = option(o.max_edges, 6);
  const int n_random = option(o.cases, 20);
  params = {{"max_vertices", std::to_string(max_vertices)},
            {"max_edges", std::to_string(max_edges)},
            {"random_cases", std::to_string(n_random)}};
  std::vector<Task> tasks;
  auto add = [&](std::string id, MultiGraph g) {
    tasks.push_back({std::move(id), {{"graph", describe(g)}}, [g](Fields& out) {
                       const GaussianRational value =
                           partition_function(g, matchings_model(cap_for(g)), Mode::kOrdinary).value;
                       const auto count = static_cast<long>(oracles::matching_count_oracle(g));
                       out = {{"engine", str(value)}, {"oracle", std::to_string(count)}};
                       return value == GaussianRational(count);
                     }});
  };
  for (int n = 0; n <= max_vertices; ++n) {
    std::size_t i = 0;
    for (MultiGraph& g : gen::all_simple_graphs(n)) add("simple-n" + std::to_string(n) + "-" + padded(i++), std::move(g));
  }
  gen::Rng rng(o.seed);
  for (int i = 0; i < n_random; ++i) {
    add("random-" + padded(static_cast<std::size_t>(i)), gen::random_multigraph(rng, max_vertices, max_edges, true));
  }
  return tasks;
}

// charpoly: p_{h(t)}(G) = det(tI - A) = Sachs sum.
std::vector<Task> charpoly_suite(const SuiteOptions& o, Fields& params) {
  const int max_vertices = option(o.max_vertices, 4);
  const int max_edges = option(o.max_edges, 6);
  params = {{"max_vertices", std::to_string(max_vertices)},
            {"max_edges", std::to_string(max_edges)},
            {"t", "0 1 -2 3/2"}};
  const std::vector<GaussianRational> ts = {0, 1, -2, GaussianRational(Rational(3, 2))};
  std::vector<Task> tasks;
  std::size_t i = 0;
  for (MultiGraph& g : gen::all_multigraphs(max_vertices, max_edges, true)) {
    tasks.push_back({"g" + padded(i++), {{"graph", describe(g)}}, [g, ts](Fields& out) {
                       const oracles::Polynomial p = oracles::charpoly_oracle(g);
                       bool ok = true;
                       for (const GaussianRational& t : ts) {
                         const GaussianRational engine =
                             partition_function(g, charpoly_model(t, cap_for(g)), Mode::kMixed).value;
                         const GaussianRational det = p(t);
                         const GaussianRational sachs = oracles::sachs_oracle(g, t);
                         out.emplace_back("t=" + str(t), str(engine) + " " + str(det) + " " + str(sachs));
                         ok = ok && engine == det && engine == sachs;
                       }
                       return ok;
                     }});
  }
  return tasks;
}

// dglrs: the signed sum over G_pi is nonzero for p(G; 0).
std::vector<Task> dglrs_suite(const SuiteOptions& o, Fields& params) {
  std::vector<int> ks = {1, 2};
  if (o.k >= 0) {
    if (o.k < 1 || o.k > 3) throw std::invalid_argument("dglrs: k must be 1, 2 or 3");
    ks = {o.k};
  }
  std::string listed;
  for (int k : ks) listed += (listed.empty() ? "" : " ") + std::to_string(k);
  params = {{"k", listed}};
  std::vector<Task> tasks;
  for (int k : ks) {
    tasks.push_back({"k" + std::to_string(k), {{"k", std::to_string(k)}}, [k](Fields& out) {
                       const GaussianRational oracle_sum = dglrs_constraint_sum(
                           [](const MultiGraph& g) { return GaussianRational(oracles::adjacency_determinant(g)); }, k);
                       const GaussianRational engine_sum = dglrs_constraint_sum(
                           [](const MultiGraph& g) {
                             return partition_function(g, charpoly_model(0, cap_for(g)), Mode::kMixed).value;
                           },
                           k);
                       const bool violated = !oracle_sum.is_zero();
                       out = {{"oracle_sum", str(oracle_sum)},
                              {"engine_sum", str(engine_sum)},
                              {"verdict", violated ? "constraint violated as claimed" : "constraint holds"}};
                       return violated && engine_sum == oracle_sum;
                     }});
  }
  return tasks;
}

// circuitpoly: circuit models against the transition-system oracle.
std::vector<Task> circuitpoly_suite(const SuiteOptions& o, Fields& params) {
  const int max_vertices = option(o.max_vertices, 4);
  const int max_edges = option(o.max_edges, 6);
  params = {{"max_vertices", std::to_string(max_vertices)},
            {"max_edges", std::to_string(max_edges)},
            {"circle_variants", "0 1"}};
  std::vector<Task> tasks;
  std::size_t i = 0;
  for (const MultiGraph& base : gen::all_multigraphs(max_vertices, max_edges, true)) {
    if (!base.is_eulerian()) continue;
    for (int circles = 0; circles <= 1; ++circles) {
      MultiGraph g = base;
      g.add_circles(circles);
      tasks.push_back({"g" + padded(i) + "-c" + std::to_string(circles), {{"graph", describe(g)}}, [g](Fields& out) {
                         const oracles::Polynomial j = oracles::circuit_partition_oracle(g);
                         const int cap = cap_for(g);
                         bool ok = true;
                         auto check = [&](const std::string& name, const EdgeColoringModel& h, Mode mode, long x) {
                           const GaussianRational engine = partition_function(g, h, mode).value;
                           const GaussianRational want = j(x);
                           out.emplace_back(name, str(engine) + " J(" + std::to_string(x) + ")=" + str(want));
                           ok = ok && engine == want;
                         };
                         for (int k = 1; k <= 3; ++k) {
                           check("circuit-pos?k=" + std::to_string(k), circuit_pos_model(k, cap), Mode::kOrdinary, k);
                         }
                         check("circuit-neg?l=1", circuit_neg_model(1), Mode::kSkew, -2);
                         check("circuit-odd?l=1", circuit_odd_model(1, cap), Mode::kMixed, -1);
                         return ok;
                       }});
    }
    ++i;
  }
  return tasks;
}

// invariance: s_h does not depend on the Eulerian state.
std::vector<Task> invariance_suite(const SuiteOptions& o, Fields& params) {
  const int n_cases = option(o.cases, 50);
  const int states = 10;
  params = {{"cases", std::to_string(n_cases)}, {"states", std::to_string(states)}, {"seed_tries", "200"}};
  gen::Rng rng(o.seed);
  std::vector<Task> tasks;
  while (static_cast<int>(tasks.size()) < n_cases) {
    const MultiGraph g = gen::random_multigraph(rng, 5, 8, true);
    const auto subsets = enumerate_eulerian_subsets(g);
    const EdgeSet subset = subsets[std::uniform_int_distribution<std::size_t>(0, subsets.size() - 1)(rng)];
    std::vector<EulerianState> distinct;
    for (unsigned s = 0; s < 200 && static_cast<int>(distinct.size()) < states; ++s) {
      EulerianState st = eulerian_state(g, subset, s);
      if (std::find(distinct.begin(), distinct.end(), st) == distinct.end()) distinct.push_back(std::move(st));
    }
    if (static_cast<int>(distinct.size()) < states) continue;
    // Wide enough exterior part that the wedge at each vertex can survive;
    // redraw the model a few times to avoid a trivially zero s_h.
    int max_f_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_f_degree = std::max(max_f_degree, g.degree_in(v, subset));
    const ColorSpace space{std::uniform_int_distribution<int>(0, 2)(rng), std::max(2, max_f_degree)};
    if (space.two_ell > 8) continue;
    EdgeColoringModel h;
    for (int attempt = 0; attempt < 20; ++attempt) {
      h = gen::random_sparse_model(rng, space, cap_for(g), 0.5);
      if (!s_h(g, subset, h, distinct.front()).is_zero()) break;
    }
    std::string subset_text;
    for (int e : subset.to_vector()) subset_text += (subset_text.empty() ? "" : " ") + std::to_string(e);
    tasks.push_back({"case-" + padded(tasks.size()),
                     {{"graph", describe(g)}, {"subset", "[" + subset_text + "]"}, {"model", describe(h)}},
                     [g, subset, h, distinct](Fields& out) {
                       GaussianRational first;
                       bool ok = true;
                       for (std::size_t i = 0; i < distinct.size(); ++i) {
                         const GaussianRational v = s_h(g, subset, h, distinct[i]);
                         if (i == 0) first = v;
                         ok = ok && v == first;
                         if (!ok && out.empty()) out.emplace_back("mismatch_state", std::to_string(i));
                       }
                       out.emplace_back("s_h", str(first));
                       out.emplace_back("states", std::to_string(distinct.size()));
                       return ok;
                     }});
  }
  return tasks;
}

std::vector<DirectedMatching> directed_perfect_matchings(int m) {
  std::vector<DirectedMatching> out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(static_cast<std::size_t>(2 * m), false);
  std::function<void()> rec = [&] {
    auto it = std::find(used.begin(), used.end(), false);
    if (it == used.end()) {
      for (int flips = 0; flips < (1 << m); ++flips) {
        DirectedMatching dm;
        for (int i = 0; i < m; ++i) {
          auto [a, b] = pairs[static_cast<std::size_t>(i)];
          dm.arcs.emplace_back((flips >> i) & 1 ? std::make_pair(b, a) : std::make_pair(a, b));
        }
        out.push_back(std::move(dm));
      }
      return;
    }
    const int a = static_cast<int>(it - used.begin());
    used[a] = true;
    for (int b = a + 1; b < 2 * m; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(a + 1, b + 1);
      rec();
      pairs.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec();
  return out;
}

// signs: matching_sign against permutation search, exhaustively.
std::vector<Task> signs_suite(const SuiteOptions& o, Fields& params) {
  const int max_m = option(o.max_m, 3);
  if (max_m > 4) throw std::invalid_argument("signs: max-m above 4 is too large for exhaustive search");
  params = {{"max_m", std::to_string(max_m)}};
  std::vector<Task> tasks;
  for (int m = 1; m <= max_m; ++m) {
    tasks.push_back({"m" + std::to_string(m), {{"ground_set", "[1.." + std::to_string(2 * m) + "]"}}, [m](Fields& out) {
                       const auto all = directed_perfect_matchings(m);
                       std::size_t pairs = 0;
                       std::size_t mismatches = 0;
                       for (const auto& a : all) {
                         for (const auto& b : all) {
                           ++pairs;
                           if (matching_sign(a, b) != oracles::permutation_sign_oracle(a, b)) ++mismatches;
                         }
                       }
                       out = {{"matchings", std::to_string(all.size())},
                              {"pairs", std::to_string(pairs)},
                              {"mismatches", std::to_string(mismatches)}};
                       return mismatches == 0;
                     }});
  }
  return tasks;
}

// gram: fragment tensors pair to glued values, pairwise and summed.
std::vector<Task> gram_suite(const SuiteOptions& o, Fields& params) {
  const int n_cases = option(o.cases, 30);
  const int max_edges = option(o.max_edges, 4);
  params = {{"cases", std::to_string(n_cases)}, {"max_edges", std::to_string(max_edges)}, {"t", "1 2 3"},
            {"spaces", "(1,2) (2,2)"}};
  gen::Rng rng(o.seed);
  std::vector<Task> tasks;
  for (int i = 0; i < n_cases; ++i) {
    const ColorSpace space = i % 2 == 0 ? ColorSpace{1, 2} : ColorSpace{2, 2};
    const int t = std::uniform_int_distribution<int>(1, 3)(rng);
    const Fragment f1 = gen::random_fragment(rng, t, 2, std::max(max_edges, t));
    const Fragment f2 = gen::random_fragment(rng, t, 2, std::max(max_edges, t));
    const int cap = std::max({1, f1.graph().max_degree(), f2.graph().max_degree()});
    // Redraw the model a few times so that most pairs glue to a nonzero value.
    EdgeColoringModel h;
    for (int attempt = 0; attempt < 20; ++attempt) {
      h = gen::random_sparse_model(rng, space, cap, 0.6);
      if (!partition_function(glue(f1, f2), h, Mode::kMixed).value.is_zero()) break;
    }
    const auto seed1 = static_cast<unsigned>(rng() % 1000);
    const auto seed2 = static_cast<unsigned>(rng() % 1000);
    tasks.push_back(
        {"pair-" + padded(static_cast<std::size_t>(i)),
         {{"first", describe(f1)}, {"second", describe(f2)}, {"model", describe(h)},
          {"state_seeds", std::to_string(seed1) + " " + std::to_string(seed2)}},
         [=](Fields& out) {
           std::size_t checks = 0;
           std::size_t mismatches = 0;
           std::size_t nonzero = 0;
           for (EdgeSet h1 : enumerate_eulerian_subsets(f1)) {
             const FragmentTensor t1 = fragment_tensor(f1, h1, h, eulerian_state(f1, h1, seed1));
             for (EdgeSet h2 : enumerate_eulerian_subsets(f2)) {
               const FragmentTensor t2 = fragment_tensor(f2, h2, h, eulerian_state(f2, h2, seed2));
               const GaussianRational pairing = gram_pairing(t1, t2);
               const GaussianRational want = touched_labels(f1, h1) == touched_labels(f2, h2)
                                                 ? glued_subset_value(f1, h1, f2, h2, h)
                                                 : GaussianRational();
               ++checks;
               if (!(pairing == want)) ++mismatches;
               if (!want.is_zero()) ++nonzero;
             }
           }
           const GaussianRational summed = gram_pairing(fragment_tensor_sum(f1, h), fragment_tensor_sum(f2, h));
           const GaussianRational p = partition_function(glue(f1, f2), h, Mode::kMixed).value;
           out = {{"pairwise_checks", std::to_string(checks)},
                  {"pairwise_nonzero", std::to_string(nonzero)},
                  {"pairwise_mismatches", std::to_string(mismatches)},
                  {"gram_sum", str(summed)},
                  {"p_h", str(p)}};
           return mismatches == 0 && summed == p;
         }});
  }
  return tasks;
}

// rank: connection-matrix rank against (k + 2l)^t.
std::vector<Task> rank_suite(const SuiteOptions& o, Fields& params) {
  const int max_internal = option(o.max_vertices, 2);
  params = {{"t", "1 2"}, {"max_internal_vertices", std::to_string(max_internal)},
            {"max_edges", o.max_edges >= 0 ? std::to_string(o.max_edges) : "3 (t=1), 4 (t=2)"}};
  std::vector<Task> tasks;
  for (int t = 1; t <= 2; ++t) {
    const int max_edges = option(o.max_edges, t == 1 ? 3 : 4);
    const std::vector<Fragment> family = gen::all_fragments(t, max_internal, max_edges);
    int cap = 1;
    for (const Fragment& f : family) cap = std::max(cap, f.graph().max_degree());
    struct Named {
      std::string name;
      EdgeColoringModel h;
      Mode mode;
      long bound;
    };
    const long four = 4;
    const long three = 3;
    const long two = 2;
    const std::vector<Named> models = {
        {"charpoly?t=0", charpoly_model(0, cap), Mode::kMixed, t == 1 ? four : four * four},
        {"circuit-odd?l=1", circuit_odd_model(1, cap), Mode::kMixed, t == 1 ? three : three * three},
        {"matchings", matchings_model(cap), Mode::kOrdinary, t == 1 ? two : two * two},
    };
    for (const Named& m : models) {
      tasks.push_back({"t" + std::to_string(t) + "-" + m.name,
                       {{"fragments", std::to_string(family.size())}, {"model", m.name},
                        {"mode", std::string(to_string(m.mode))}},
                       [family, m](Fields& out) {
                         const int rank = exact_rank(connection_matrix(family, m.h, m.mode));
                         out = {{"rank", std::to_string(rank)}, {"bound", std::to_string(m.bound)}};
                         return rank <= m.bound;
                       }});
    }
  }
  return tasks;
}

// specialization: mixed mode reduces to ordinary and skew; multiplicativity.
std::vector<Task> specialization_suite(const SuiteOptions& o, Fields& params) {
  const int max_vertices = option(o.max_vertices, 4);
  const int max_edges = option(o.max_edges, 6);
  const int n_pairs = option(o.cases, 20);
  params = {{"max_vertices", std::to_string(max_vertices)},
            {"max_edges", std::to_string(max_edges)},
            {"product_pairs", std::to_string(n_pairs)}};
  gen::Rng rng(o.seed);
  std::vector<Task> tasks;
  std::size_t i = 0;
  for (const MultiGraph& g : gen::all_multigraphs(max_vertices, max_edges, true)) {
    const EdgeColoringModel sym =
        gen::random_sparse_model(rng, {std::uniform_int_distribution<int>(1, 2)(rng), 0}, cap_for(g), 0.7);
    const EdgeColoringModel ext =
        gen::random_sparse_model(rng, {0, 2 * std::uniform_int_distribution<int>(1, 2)(rng)}, 0, 0.7);
    tasks.push_back({"graph-" + padded(i++),
                     {{"graph", describe(g)}, {"sym_model", describe(sym)}, {"ext_model", describe(ext)}},
                     [g, sym, ext](Fields& out) {
                       const GaussianRational mo = partition_function(g, sym, Mode::kMixed).value;
                       const GaussianRational o = partition_function(g, sym, Mode::kOrdinary).value;
                       const GaussianRational ms = partition_function(g, ext, Mode::kMixed).value;
                       const GaussianRational s = partition_function(g, ext, Mode::kSkew).value;
                       out = {{"mixed_vs_ordinary", str(mo) + " " + str(o)}, {"mixed_vs_skew", str(ms) + " " + str(s)}};
                       return mo == o && ms == s;
                     }});
  }
  for (int p = 0; p < n_pairs; ++p) {
    MultiGraph g = gen::random_multigraph(rng, 3, 4, true);
    MultiGraph hgraph = gen::random_multigraph(rng, 3, 4, true);
    g.add_circles(std::uniform_int_distribution<int>(0, 1)(rng));
    hgraph.add_circles(std::uniform_int_distribution<int>(0, 1)(rng));
    const MultiGraph both = disjoint_union(g, hgraph);
    const int cap = cap_for(both);
    const ColorSpace mixed_space = p % 2 == 0 ? ColorSpace{1, 2} : ColorSpace{2, 2};
    const std::vector<std::pair<EdgeColoringModel, Mode>> models = {
        {gen::random_sparse_model(rng, mixed_space, cap, 0.7), Mode::kMixed},
        {gen::random_sparse_model(rng, {2, 0}, cap, 0.7), Mode::kOrdinary},
        {gen::random_sparse_model(rng, {0, 2}, 0, 0.7), Mode::kSkew},
    };
    Fields inputs = {{"first", describe(g)}, {"second", describe(hgraph)}};
    for (const auto& [h, mode] : models) inputs.emplace_back(std::string(to_string(mode)) + "_model", describe(h));
    tasks.push_back({"product-" + padded(static_cast<std::size_t>(p)), inputs, [g, hgraph, both, models](Fields& out) {
                       bool ok = true;
                       for (const auto& [h, mode] : models) {
                         const GaussianRational whole = partition_function(both, h, mode).value;
                         const GaussianRational product =
                             partition_function(g, h, mode).value * partition_function(hgraph, h, mode).value;
                         out.emplace_back(std::string(to_string(mode)), str(whole) + " " + str(product));
                         ok = ok && whole == product;
                       }
                       return ok;
                     }});
  }
  return tasks;
}

using SuiteFn = std::vector<Task> (*)(const SuiteOptions&, Fields&);

const std::map<std::string, SuiteFn, std::less<>>& suites() {
  static const std::map<std::string, SuiteFn, std::less<>> table = {
      {"circle", circle_suite},         {"matchings", matchings_suite},     {"charpoly", charpoly_suite},
      {"dglrs", dglrs_suite},           {"circuitpoly", circuitpoly_suite}, {"invariance", invariance_suite},
      {"signs", signs_suite},           {"gram", gram_suite},               {"rank", rank_suite},
      {"specialization", specialization_suite},
  };
  return table;
}

}  // namespace

std::size_t RunReport::failed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

std::string RunReport::to_json(const std::string& command, bool timing) const {
  using nlohmann::ordered_json;
  auto fields = [](const Fields& f) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : f) j[k] = v;
    return j;
  };
  ordered_json j;
  j["command"] = command;
  j["suite"] = suite;
  j["params"] = fields(params);
  j["summary"] = {{"cases", cases.size()}, {"passed", cases.size() - failed()}, {"failed", failed()}};
  j["verdict"] = ok() ? "PASS" : "FAIL";
  if (timing) j["seconds"] = seconds;
  ordered_json list = ordered_json::array();
  for (const CaseResult& c : cases) {
    list.push_back({{"id", c.id}, {"pass", c.pass}, {"inputs", fields(c.inputs)}, {"values", fields(c.values)}});
  }
  j["cases"] = std::move(list);
  return j.dump(2) + '\n';
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"circle", "matchings",  "charpoly", "dglrs", "circuitpoly",
                                                 "invariance", "signs", "gram",     "rank",  "specialization"};
  return names;
}

RunReport run_suite(std::string_view name, const SuiteOptions& options) {
  auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.suite = std::string(name);
  std::vector<Task> tasks = it->second(options, report.params);
  report.params.insert(report.params.begin(), {"seed", std::to_string(options.seed)});
  report.cases = run_tasks(tasks);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mixedpf::verify
