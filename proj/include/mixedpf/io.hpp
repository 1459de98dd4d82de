#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixedpf/connection.hpp"
#include "mixedpf/graph.hpp"
#include "mixedpf/models.hpp"

namespace mixedpf::io {

/// Malformed input. `line` is 1-based, or 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Text graph format, one declaration per line, '#' starts a comment:
//   vertices N     vertex ids 0..N-1 (must come first)
//   edge U V       an edge, a loop when U == V
//   circle         one vertexless circle component
//   label V        appends V to the label list; V must end with degree 1
//
// A file holding a fragment list repeats this block; every `vertices` line
// starts a new fragment.

/// A graph without labels. Throws ParseError.
MultiGraph parse_graph(std::string_view text);
/// A single fragment; input fragments may not declare circles. Throws ParseError.
Fragment parse_fragment(std::string_view text);
/// Zero or more fragments. Throws ParseError.
std::vector<Fragment> parse_fragments(std::string_view text);

std::string format_graph(const MultiGraph& g);
std::string format_fragment(const Fragment& f);

/// Model JSON:
///   {"k": K, "two_ell": L, "cap": D,
///    "entries": [{"sym": [c1..cK], "ext": [i1, ...], "value": {"re": "p/q", "im": "r/s"}}]}
/// with 1-based, strictly increasing ext indices. Throws ParseError.
EdgeColoringModel parse_model_json(std::string_view text);
std::string model_to_json(const EdgeColoringModel& h);

/// Built-in models by name: matchings, charpoly?t=p/q, circuit-pos?k=K,
/// circuit-neg?l=L, circuit-odd?l=L. Parameters are joined with '&'; every
/// model also accepts cap=D, which otherwise defaults to `default_cap`.
/// Throws ParseError.
EdgeColoringModel builtin_model(std::string_view spec, int default_cap);

/// One row per line, entries as GaussianRational strings, comma separated.
std::string matrix_to_csv(const std::vector<std::vector<GaussianRational>>& rows);

/// Whole file as a string. Throws ParseError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace mixedpf::io
