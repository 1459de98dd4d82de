#include <gtest/gtest.h>

#include "mixedpf/io.hpp"

using namespace mixedpf;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

int error_line(const std::string& text, bool fragments = false) {
  try {
    if (fragments) {
      io::parse_fragments(text);
    } else {
      io::parse_graph(text);
    }
  } catch (const io::ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(GraphText, ParsesAndRoundTrips) {
  const MultiGraph g = io::parse_graph("# triangle with a loop\nvertices 3\nedge 0 1\nedge 1 2  # comment\n\nedge 2 0\nedge 1 1\ncircle\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g.circle_count(), 1);
  EXPECT_EQ(io::parse_graph(io::format_graph(g)), g);
}

TEST(GraphText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("vertices 2\nedge 0 2\n"), 2);
  EXPECT_EQ(error_line("vertices 2\nedges 0 1\n"), 2);
  EXPECT_EQ(error_line("edge 0 1\n"), 1);
  EXPECT_EQ(error_line("vertices 2\nedge 0\n"), 2);
  EXPECT_EQ(error_line("vertices x\n"), 1);
  EXPECT_EQ(error_line("vertices 2\nedge 0 1 1\n"), 2);
  EXPECT_EQ(error_line("vertices 2\nvertices 3\n"), 2);
  EXPECT_EQ(error_line("vertices 2\nedge 0 1\nlabel 0\n"), 3);
  EXPECT_EQ(error_line(""), 0);
}

TEST(FragmentText, LabelsAndDegreeChecks) {
  const Fragment f = io::parse_fragment("vertices 3\nedge 1 0\nedge 0 2\nlabel 1\nlabel 2\n");
  EXPECT_EQ(f.t(), 2);
  EXPECT_EQ(f.labeled(), (std::vector<int>{1, 2}));
  EXPECT_EQ(io::parse_fragment(io::format_fragment(f)).labeled(), f.labeled());
  EXPECT_EQ(error_line("vertices 2\nedge 0 1\nedge 0 1\nlabel 0\n", true), 4);
  EXPECT_EQ(error_line("vertices 2\nedge 0 1\nlabel 0\nlabel 0\n", true), 4);
  EXPECT_EQ(error_line("vertices 2\nedge 0 1\nlabel 0\nlabel 1\ncircle\n", true), 5);
}

TEST(FragmentText, ListStartsNewFragmentAtVertices) {
  const auto list = io::parse_fragments("vertices 2\nedge 0 1\nlabel 0\nlabel 1\n\nvertices 3\nedge 1 0\nedge 0 2\nlabel 1\nlabel 2\n");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[1].graph().vertex_count(), 3);
  EXPECT_TRUE(io::parse_fragments("# nothing\n").empty());
}

TEST(ModelJson, RoundTrip) {
  const EdgeColoringModel h = charpoly_model(GaussianRational(Rational(3, 2), Rational(-1)), 3);
  const EdgeColoringModel back = io::parse_model_json(io::model_to_json(h));
  EXPECT_EQ(back.space(), h.space());
  EXPECT_EQ(back.sym_cap(), 3);
  const auto a = h.entries();
  const auto b = back.entries();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].sym, b[i].sym);
    EXPECT_EQ(a[i].ext, b[i].ext);
    EXPECT_EQ(a[i].value, b[i].value);
  }
}

TEST(ModelJson, ParsesValuesAndRejectsBadInput) {
  const EdgeColoringModel h = io::parse_model_json(
      R"({"k": 1, "two_ell": 2, "cap": 2, "entries": [{"sym": [2], "ext": [1, 2], "value": {"re": "1/2", "im": "-3"}}, {"sym": [0], "ext": [], "value": 4}]})");
  EXPECT_EQ(h.value(SymBasisIndex{{2}}, ExtBasisIndex{{0, 1}}), GaussianRational(Rational(1, 2), Rational(-3)));
  EXPECT_EQ(h.value(SymBasisIndex{{0}}, ExtBasisIndex{}), gr(4));
  EXPECT_THROW(io::parse_model_json("{"), io::ParseError);
  EXPECT_THROW(io::parse_model_json(R"({"k": 1, "two_ell": 3, "cap": 1, "entries": []})"), io::ParseError);
  EXPECT_THROW(io::parse_model_json(R"({"k": 1, "two_ell": 2, "cap": 1, "entries": [{"sym": [1], "ext": [2, 1], "value": 1}]})"),
               io::ParseError);
  EXPECT_THROW(io::parse_model_json(R"({"k": 1, "two_ell": 2, "cap": 1, "entries": [{"sym": [2], "ext": [], "value": 1}]})"),
               io::ParseError);
  EXPECT_THROW(io::parse_model_json(R"({"k": 1, "two_ell": 2, "cap": 1, "entries": [{"sym": [1, 0], "ext": [], "value": 1}]})"),
               io::ParseError);
  EXPECT_THROW(io::parse_model_json(R"({"k": 1, "two_ell": 2, "cap": 1, "entries": [{"sym": [1], "ext": [3], "value": 1}]})"),
               io::ParseError);
  EXPECT_THROW(io::parse_model_json(R"({"k": 1, "two_ell": 2, "cap": 1})"), io::ParseError);
}

TEST(BuiltinModel, Specs) {
  EXPECT_EQ(io::builtin_model("matchings", 3).space(), (ColorSpace{2, 0}));
  EXPECT_EQ(io::builtin_model("matchings", 3).sym_cap(), 3);
  EXPECT_EQ(io::builtin_model("matchings?cap=5", 3).sym_cap(), 5);
  const EdgeColoringModel cp = io::builtin_model("charpoly?t=3/2", 2);
  EXPECT_EQ(cp.value(SymBasisIndex{{1, 0}}, ExtBasisIndex{}), GaussianRational(Rational(3, 2)));
  EXPECT_EQ(io::builtin_model("circuit-pos?k=3", 2).space(), (ColorSpace{3, 0}));
  EXPECT_EQ(io::builtin_model("circuit-neg?l=2", 2).space(), (ColorSpace{0, 4}));
  EXPECT_EQ(io::builtin_model("circuit-odd?l=1", 2).space(), (ColorSpace{1, 2}));
  EXPECT_THROW(io::builtin_model("charpoly", 2), io::ParseError);
  EXPECT_THROW(io::builtin_model("charpoly?t=x", 2), io::ParseError);
  EXPECT_THROW(io::builtin_model("circuit-pos?k=0", 2), io::ParseError);
  EXPECT_THROW(io::builtin_model("circuit-pos?k=1&q=2", 2), io::ParseError);
  EXPECT_THROW(io::builtin_model("potts", 2), io::ParseError);
  EXPECT_THROW(io::builtin_model("matchings?cap", 2), io::ParseError);
}

TEST(Csv, Rows) {
  EXPECT_EQ(io::matrix_to_csv({{gr(1), gr(0, 1)}, {GaussianRational(Rational(-1, 2)), gr(2, -3)}}), "1,i\n-1/2,2-3i\n");
}
