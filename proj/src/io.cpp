#include "mixedpf/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mixedpf::io {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Block {
  int vertices_line = 0;
  MultiGraph graph;
  std::vector<int> labels;
  std::vector<int> label_lines;
  int first_circle_line = 0;
};

std::vector<Block> parse_blocks(std::string_view text) {
  std::vector<Block> blocks;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const std::string_view key = words[0];
    auto arg = [&](std::size_t i) {
      auto v = to_int(words[i]);
      if (!v) throw ParseError(line_no, "expected an integer, got '" + std::string(words[i]) + "'");
      return *v;
    };
    auto expect_args = [&](std::size_t n) {
      if (words.size() != n + 1) {
        throw ParseError(line_no, "'" + std::string(key) + "' takes " + std::to_string(n) + " argument(s)");
      }
    };
    auto vertex = [&](std::size_t i) {
      const int v = arg(i);
      if (v < 0 || v >= blocks.back().graph.vertex_count()) {
        throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
      }
      return v;
    };

    if (key == "vertices") {
      expect_args(1);
      const int n = arg(1);
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      blocks.push_back({line_no, MultiGraph(n), {}, {}, 0});
      continue;
    }
    if (key != "edge" && key != "circle" && key != "label") {
      throw ParseError(line_no, "unknown keyword '" + std::string(key) + "'");
    }
    if (blocks.empty()) throw ParseError(line_no, "'vertices' must come first");
    Block& b = blocks.back();
    if (key == "edge") {
      expect_args(2);
      const int u = vertex(1);
      const int v = vertex(2);
      if (b.graph.edge_count() >= EdgeSet::kMaxEdges) throw ParseError(line_no, "too many edges");
      b.graph.add_edge(u, v);
    } else if (key == "circle") {
      expect_args(0);
      b.graph.add_circles(1);
      if (b.first_circle_line == 0) b.first_circle_line = line_no;
    } else {
      expect_args(1);
      b.labels.push_back(vertex(1));
      b.label_lines.push_back(line_no);
    }
  }
  return blocks;
}

Fragment to_fragment(const Block& b) {
  if (b.first_circle_line > 0) {
    throw ParseError(b.first_circle_line, "input fragments may not declare circles");
  }
  std::set<int> seen;
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    const int v = b.labels[i];
    const int line = b.label_lines[i];
    if (!seen.insert(v).second) throw ParseError(line, "vertex " + std::to_string(v) + " labeled twice");
    if (b.graph.degree(v) != 1) {
      throw ParseError(line, "labeled vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(b.graph.degree(v)) + ", expected 1");
    }
  }
  return Fragment(b.graph, b.labels);
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  auto blocks = parse_blocks(text);
  if (blocks.empty()) throw ParseError(0, "missing 'vertices' declaration");
  if (blocks.size() > 1) throw ParseError(blocks[1].vertices_line, "second 'vertices' declaration in a graph file");
  if (!blocks[0].labels.empty()) throw ParseError(blocks[0].label_lines[0], "graph files may not declare labels");
  return blocks[0].graph;
}

Fragment parse_fragment(std::string_view text) {
  auto blocks = parse_blocks(text);
  if (blocks.empty()) throw ParseError(0, "missing 'vertices' declaration");
  if (blocks.size() > 1) throw ParseError(blocks[1].vertices_line, "second 'vertices' declaration in a fragment file");
  return to_fragment(blocks[0]);
}

std::vector<Fragment> parse_fragments(std::string_view text) {
  std::vector<Fragment> out;
  for (const Block& b : parse_blocks(text)) out.push_back(to_fragment(b));
  return out;
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << "edge " << e.a << ' ' << e.b << '\n';
  for (int c = 0; c < g.circle_count(); ++c) os << "circle\n";
  return os.str();
}

std::string format_fragment(const Fragment& f) {
  std::string out = format_graph(f.graph());
  for (int v : f.labeled()) out += "label " + std::to_string(v) + '\n';
  return out;
}

namespace {

using nlohmann::json;

int json_int(const json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(0, std::string("model: missing field '") + field + "'");
  const json& v = j.at(field);
  if (!v.is_number_integer()) throw ParseError(0, std::string("model: field '") + field + "' must be an integer");
  return v.get<int>();
}

Rational json_rational(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, where + ": " + e.what());
  }
  throw ParseError(0, where + ": expected a rational string or an integer");
}

}  // namespace

EdgeColoringModel parse_model_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("model JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "model JSON: top level must be an object");
  const int k = json_int(j, "k");
  const int two_ell = json_int(j, "two_ell");
  const int cap = json_int(j, "cap");
  if (k < 0 || two_ell < 0 || two_ell % 2 != 0) throw ParseError(0, "model: need k >= 0 and an even two_ell >= 0");
  if (cap < 0) throw ParseError(0, "model: negative cap");

  std::optional<EdgeColoringModel> h;
  try {
    h.emplace(ColorSpace{k, two_ell}, cap);
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("model: ") + e.what());
  }
  if (!j.contains("entries") || !j.at("entries").is_array()) throw ParseError(0, "model: 'entries' must be an array");

  std::set<std::pair<SymBasisIndex, ExtBasisIndex>> seen;
  int n = 0;
  for (const json& entry : j.at("entries")) {
    const std::string where = "model entry " + std::to_string(n++);
    if (!entry.is_object()) throw ParseError(0, where + ": must be an object");
    SymBasisIndex sym;
    ExtBasisIndex ext;
    const json& js = entry.value("sym", json::array());
    const json& je = entry.value("ext", json::array());
    if (!js.is_array() || static_cast<int>(js.size()) != k) {
      throw ParseError(0, where + ": 'sym' must list " + std::to_string(k) + " counts");
    }
    for (const json& c : js) {
      if (!c.is_number_integer() || c.get<int>() < 0) throw ParseError(0, where + ": bad symmetric count");
      sym.counts.push_back(c.get<int>());
    }
    if (sym.degree() > cap) throw ParseError(0, where + ": symmetric degree exceeds cap");
    if (!je.is_array()) throw ParseError(0, where + ": 'ext' must be an array");
    for (const json& c : je) {
      if (!c.is_number_integer()) throw ParseError(0, where + ": bad exterior index");
      const int i = c.get<int>();
      if (i < 1 || i > two_ell) throw ParseError(0, where + ": exterior index out of range");
      if (!ext.indices.empty() && i - 1 <= ext.indices.back()) {
        throw ParseError(0, where + ": exterior indices must be strictly increasing");
      }
      ext.indices.push_back(i - 1);
    }
    if (!seen.insert({sym, ext}).second) throw ParseError(0, where + ": duplicate key");
    if (!entry.contains("value")) throw ParseError(0, where + ": missing 'value'");
    const json& jv = entry.at("value");
    GaussianRational value;
    if (jv.is_object()) {
      value = GaussianRational(json_rational(jv.value("re", json(0)), where + " re"),
                               json_rational(jv.value("im", json(0)), where + " im"));
    } else {
      value = GaussianRational(json_rational(jv, where + " value"));
    }
    h->set(sym, ext, value);
  }
  return *h;
}

std::string model_to_json(const EdgeColoringModel& h) {
  json entries = json::array();
  for (const auto& e : h.entries()) {
    json ext = json::array();
    for (int i : e.ext.indices) ext.push_back(i + 1);
    entries.push_back({{"sym", e.sym.counts},
                       {"ext", ext},
                       {"value", {{"re", rational_to_string(e.value.re())}, {"im", rational_to_string(e.value.im())}}}});
  }
  json j = {{"k", h.k()}, {"two_ell", h.two_ell()}, {"cap", h.sym_cap()}, {"entries", entries}};
  return j.dump(2) + '\n';
}

EdgeColoringModel builtin_model(std::string_view spec, int default_cap) {
  const std::size_t q = spec.find('?');
  const std::string name(spec.substr(0, q));
  std::map<std::string, std::string> params;
  if (q != std::string_view::npos) {
    std::string_view rest = spec.substr(q + 1);
    while (!rest.empty()) {
      const std::size_t amp = rest.find('&');
      const std::string_view item = rest.substr(0, amp);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError(0, "model '" + std::string(spec) + "': expected key=value, got '" + std::string(item) + "'");
      }
      if (!params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second) {
        throw ParseError(0, "model '" + std::string(spec) + "': repeated parameter");
      }
      rest = amp == std::string_view::npos ? std::string_view() : rest.substr(amp + 1);
    }
  }

  auto take_int = [&](const std::string& key, std::optional<int> fallback) {
    auto it = params.find(key);
    if (it == params.end()) {
      if (!fallback) throw ParseError(0, "model '" + name + "' needs parameter " + key);
      return *fallback;
    }
    auto v = to_int(it->second);
    if (!v || *v < 0) throw ParseError(0, "model '" + name + "': " + key + " must be a nonnegative integer");
    params.erase(it);
    return *v;
  };

  const int cap = take_int("cap", default_cap);
  EdgeColoringModel h;
  try {
    if (name == "matchings") {
      h = matchings_model(cap);
    } else if (name == "charpoly") {
      auto it = params.find("t");
      if (it == params.end()) throw ParseError(0, "model 'charpoly' needs parameter t");
      GaussianRational t;
      try {
        t = GaussianRational::parse(it->second);
      } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("model 'charpoly': bad t: ") + e.what());
      }
      params.erase(it);
      h = charpoly_model(t, cap);
    } else if (name == "circuit-pos") {
      const int k = take_int("k", std::nullopt);
      if (k < 1) throw ParseError(0, "model 'circuit-pos' needs k >= 1");
      h = circuit_pos_model(k, cap);
    } else if (name == "circuit-neg") {
      const int l = take_int("l", std::nullopt);
      if (l < 1) throw ParseError(0, "model 'circuit-neg' needs l >= 1");
      h = circuit_neg_model(l);
    } else if (name == "circuit-odd") {
      const int l = take_int("l", std::nullopt);
      if (l < 1) throw ParseError(0, "model 'circuit-odd' needs l >= 1");
      h = circuit_odd_model(l, cap);
    } else {
      throw ParseError(0, "unknown model '" + name + "'");
    }
  } catch (const std::domain_error& e) {
    throw ParseError(0, "model '" + std::string(spec) + "': " + e.what());
  }
  if (!params.empty()) throw ParseError(0, "model '" + name + "': unknown parameter " + params.begin()->first);
  return h;
}

std::string matrix_to_csv(const std::vector<std::vector<GaussianRational>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += row[j].to_string();
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace mixedpf::io
