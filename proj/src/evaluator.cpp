#include "mixedpf/evaluator.hpp"

#include <omp.h>

#include <exception>
#include <stdexcept>
#include <string>

#include "coloring_kernel.hpp"

namespace mixedpf {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kOrdinary:
      return "ordinary";
    case Mode::kSkew:
      return "skew";
    case Mode::kMixed:
      return "mixed";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "ordinary") return Mode::kOrdinary;
  if (text == "skew") return Mode::kSkew;
  if (text == "mixed") return Mode::kMixed;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected ordinary, skew or mixed)");
}

void check_mode(const EdgeColoringModel& h, Mode mode) {
  if (mode == Mode::kOrdinary && h.two_ell() != 0) {
    throw std::domain_error("ordinary mode needs a model with 2l = 0, got 2l = " + std::to_string(h.two_ell()));
  }
  if (mode == Mode::kSkew && h.k() != 0) {
    throw std::domain_error("skew mode needs a model with k = 0, got k = " + std::to_string(h.k()));
  }
}

GaussianRational circle_value(const EdgeColoringModel& h, Mode mode) {
  switch (mode) {
    case Mode::kOrdinary:
      return h.k();
    case Mode::kSkew:
      return -h.two_ell();
    case Mode::kMixed:
      return h.k() - h.two_ell();
  }
  return {};
}

namespace {

GaussianRational power(const GaussianRational& base, int exponent) {
  GaussianRational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Subsets that can contribute for this mode and model.
std::vector<EdgeSet> candidate_subsets(const MultiGraph& graph, const EdgeColoringModel& h, Mode mode) {
  const bool only_empty = mode == Mode::kOrdinary || (mode == Mode::kMixed && h.two_ell() == 0);
  const bool only_full = mode == Mode::kSkew || (mode == Mode::kMixed && h.k() == 0);
  if (only_empty && only_full) {
    // k = 2l = 0: only the empty graph on no edges has a coloring.
    return graph.edge_count() == 0 ? std::vector<EdgeSet>{EdgeSet()} : std::vector<EdgeSet>{};
  }
  if (only_empty) return {EdgeSet()};
  if (only_full) {
    if (!graph.is_eulerian()) return {};
    return {EdgeSet::all(graph.edge_count())};
  }
  return enumerate_eulerian_subsets(graph);
}

class FirstError {
 public:
  void capture() {
#pragma omp critical(mixedpf_first_error)
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

GaussianRational s_h(const MultiGraph& graph, EdgeSet subset, const EdgeColoringModel& h,
                     const EulerianState& state) {
  if (state.subset != subset) throw std::domain_error("s_h: state belongs to a different subset");
  const Fragment as_fragment(graph, {});
  validate_state(as_fragment, state);
  const std::vector<bool> has_factor(static_cast<std::size_t>(graph.vertex_count()), true);
  detail::ColoringKernel kernel(graph, has_factor, state, h);
  GaussianRational sum;
  kernel.run_all([&](const std::vector<int>&, const GaussianRational& p) { sum += p; });
  sum.negate_if(decompose(state, as_fragment).circuits % 2 != 0);
  return sum;
}

EvaluationResult partition_function(const MultiGraph& graph, const EdgeColoringModel& h, Mode mode) {
  check_mode(h, mode);
  const std::vector<EdgeSet> subsets = candidate_subsets(graph, h, mode);
  const std::vector<bool> has_factor(static_cast<std::size_t>(graph.vertex_count()), true);
  const auto threads = static_cast<std::size_t>(omp_get_max_threads());

  EvaluationResult out;
  out.counters.eulerian_subsets = subsets.size();
  FirstError error;

  if (threads == 1 || subsets.size() >= 4 * threads) {
    std::vector<GaussianRational> partial(subsets.size());
    std::vector<std::uint64_t> leaves(subsets.size(), 0);
    const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        const EulerianState state = eulerian_state(graph, subsets[i], 0);
        detail::ColoringKernel kernel(graph, has_factor, state, h);
        if (kernel.trivially_zero()) continue;
        GaussianRational sum;
        leaves[i] = kernel.run_all([&](const std::vector<int>&, const GaussianRational& p) { sum += p; });
        sum.negate_if(decompose(state, graph).circuits % 2 != 0);
        partial[i] = std::move(sum);
      } catch (...) {
        error.capture();
      }
    }
    error.rethrow();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      out.value += partial[i];
      out.counters.colorings += leaves[i];
    }
  } else {
    // Few subsets: split each one's coloring tree at a prefix depth.
    struct Task {
      std::size_t kernel;
      int depth;
      std::uint64_t prefix;
    };
    std::vector<detail::ColoringKernel> kernels;
    std::vector<bool> negative;
    std::vector<Task> tasks;
    for (EdgeSet subset : subsets) {
      const EulerianState state = eulerian_state(graph, subset, 0);
      kernels.emplace_back(graph, has_factor, state, h);
      negative.push_back(decompose(state, graph).circuits % 2 != 0);
      const detail::ColoringKernel& kernel = kernels.back();
      if (kernel.trivially_zero()) continue;
      const int depth = kernel.split_depth(8 * threads);
      const std::uint64_t n = kernel.prefix_count(depth);
      for (std::uint64_t p = 0; p < n; ++p) tasks.push_back({kernels.size() - 1, depth, p});
    }
    std::vector<GaussianRational> partial(tasks.size());
    std::vector<std::uint64_t> leaves(tasks.size(), 0);
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        const Task& task = tasks[i];
        GaussianRational sum;
        leaves[i] = kernels[task.kernel].run(task.depth, task.prefix,
                                             [&](const std::vector<int>&, const GaussianRational& p) { sum += p; });
        sum.negate_if(negative[task.kernel]);
        partial[i] = std::move(sum);
      } catch (...) {
        error.capture();
      }
    }
    error.rethrow();
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      out.value += partial[i];
      out.counters.colorings += leaves[i];
    }
  }

  if (graph.circle_count() > 0) out.value *= power(circle_value(h, mode), graph.circle_count());
  return out;
}

bool invariance_check(const MultiGraph& graph, EdgeSet subset, const EdgeColoringModel& h, int trials) {
  if (subset.empty() || trials <= 1) return true;
  const GaussianRational first = s_h(graph, subset, h, eulerian_state(graph, subset, 0));
  for (int seed = 1; seed < trials; ++seed) {
    if (!(s_h(graph, subset, h, eulerian_state(graph, subset, static_cast<unsigned>(seed))) == first)) return false;
  }
  return true;
}

}  // namespace mixedpf
