#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mixedpf/connection.hpp"
#include "mixedpf/generators.hpp"
#include "mixedpf/io.hpp"
#include "mixedpf/verify.hpp"

namespace {

using namespace mixedpf;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct ModelArgs {
  std::string spec;
  std::string file;
  std::string mode = "mixed";
};

void add_model_options(CLI::App* cmd, ModelArgs& m) {
  auto* spec = cmd->add_option("--model", m.spec, "built-in model, e.g. matchings or charpoly?t=1/2");
  auto* file = cmd->add_option("--model-file", m.file, "model JSON file");
  spec->excludes(file);
  cmd->add_option("--mode", m.mode, "ordinary, skew or mixed")->check(CLI::IsMember({"ordinary", "skew", "mixed"}));
}

EdgeColoringModel load_model(const ModelArgs& m, int default_cap) {
  if (!m.file.empty()) return io::parse_model_json(io::read_file(m.file));
  if (m.spec.empty()) throw io::ParseError(0, "one of --model or --model-file is required");
  return io::builtin_model(m.spec, default_cap);
}

int cmd_eval(const std::string& path, const ModelArgs& m) {
  const MultiGraph g = io::parse_graph(io::read_file(path));
  const EdgeColoringModel h = load_model(m, g.max_degree());
  const EvaluationResult r = partition_function(g, h, parse_mode(m.mode));
  std::cout << r.value << '\n'
            << "eulerian_subsets " << r.counters.eulerian_subsets << '\n'
            << "colorings " << r.counters.colorings << '\n';
  return 0;
}

int cmd_connrank(const std::string& path, const ModelArgs& m, const std::string& csv) {
  const std::vector<Fragment> fragments = io::parse_fragments(io::read_file(path));
  int cap = 0;
  for (const Fragment& f : fragments) cap = std::max(cap, f.graph().max_degree());
  const EdgeColoringModel h = load_model(m, cap);
  const ConnectionMatrix matrix = connection_matrix(fragments, h, parse_mode(m.mode));
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw io::ParseError(0, "cannot write " + csv);
    out << io::matrix_to_csv(matrix.entries);
  }
  const int rank = exact_rank(matrix);
  long bound = 1;
  for (int i = 0; i < matrix.t; ++i) bound *= h.k() + h.two_ell();
  const bool pass = rank <= bound;
  std::cout << "fragments " << matrix.size() << " t " << matrix.t << '\n'
            << "rank " << rank << " <= " << bound << ' ' << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : kExitFail;
}

int cmd_verify(const std::string& suite, const verify::SuiteOptions& options, bool no_timing,
               const std::string& command) {
  const verify::RunReport report = verify::run_suite(suite, options);
  std::cout << report.to_json(command, !no_timing);
  std::cerr << suite << ": " << report.cases.size() - report.failed() << "/" << report.cases.size() << " passed\n";
  return report.ok() ? 0 : kExitFail;
}

int cmd_gen_fragments(int t, int max_vertices, int max_edges, std::size_t limit) {
  const auto fragments = gen::all_fragments(t, max_vertices, max_edges, limit);
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    if (i > 0) std::cout << '\n';
    std::cout << "# fragment " << i << '\n' << io::format_fragment(fragments[i]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed partition functions of edge-coloring models"};
  app.require_subcommand(1);

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  std::string input;
  ModelArgs model;
  auto* eval = app.add_subcommand("eval", "partition function of a graph");
  eval->add_option("graph", input, "graph file")->required();
  add_model_options(eval, model);

  std::string csv;
  auto* connrank = app.add_subcommand("connrank", "rank of the connection matrix of a fragment list");
  connrank->add_option("fragments", input, "fragment list file")->required();
  add_model_options(connrank, model);
  connrank->add_option("--csv", csv, "write the matrix as CSV");

  std::string suite;
  verify::SuiteOptions options;
  bool no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--seed", options.seed, "seed for random cases");
  verify_cmd->add_option("--max-vertices", options.max_vertices, "vertex bound");
  verify_cmd->add_option("--max-edges", options.max_edges, "edge bound");
  verify_cmd->add_option("--k", options.k, "k for the dglrs suite");
  verify_cmd->add_option("--max-m", options.max_m, "largest m for the signs suite");
  verify_cmd->add_option("--cases", options.cases, "number of random cases");
  verify_cmd->add_flag("--no-timing", no_timing, "omit timing so the report is byte-stable");

  int t = 2;
  int max_vertices = 2;
  int max_edges = 4;
  std::size_t limit = 0;
  auto* gen_cmd = app.add_subcommand("gen-fragments", "enumerate t-fragments, duplicates included");
  gen_cmd->add_option("--t", t, "number of labels")->check(CLI::Range(0, 8));
  gen_cmd->add_option("--max-vertices", max_vertices, "unlabeled vertices")->check(CLI::Range(0, 6));
  gen_cmd->add_option("--max-edges", max_edges, "edges, open ends included")->check(CLI::Range(0, 12));
  gen_cmd->add_option("--limit", limit, "stop after this many fragments (0: no limit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*eval) return cmd_eval(input, model);
    if (*connrank) return cmd_connrank(input, model, csv);
    if (*verify_cmd) return cmd_verify(suite, options, no_timing, command);
    if (*gen_cmd) return cmd_gen_fragments(t, max_vertices, max_edges, limit);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
