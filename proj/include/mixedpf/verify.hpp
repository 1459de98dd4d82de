#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Verification suites: engine values against the brute-force oracles.
namespace mixedpf::verify {

/// Negative values mean "use the suite default".
struct SuiteOptions {
  unsigned seed = 0;
  int max_vertices = -1;
  int max_edges = -1;
  int k = -1;
  int max_m = -1;
  int cases = -1;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

struct CaseResult {
  std::string id;
  Fields inputs;
  Fields values;
  bool pass = false;
};

struct RunReport {
  std::string suite;
  Fields params;
  /// Sorted by id.
  std::vector<CaseResult> cases;
  double seconds = 0;

  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  /// JSON document; `command` is echoed verbatim. Without timing the output
  /// depends only on the suite and its options.
  std::string to_json(const std::string& command, bool timing) const;
};

/// circle, matchings, charpoly, dglrs, circuitpoly, invariance, signs, gram,
/// rank, specialization.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
RunReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace mixedpf::verify
