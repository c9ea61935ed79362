#include "reciprocity/io.hpp"

#include <gtest/gtest.h>

using namespace reciprocity;

namespace {

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(ParsePoset, CommentsAndRelations) {
  const Poset p = parse_poset("# lambda\n3\n1 3   # a1 < a3\n\n2 3\n");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_TRUE(p.less(1, 2));
  EXPECT_FALSE(p.leq(0, 1));
}

TEST(ParsePoset, Errors) {
  EXPECT_EQ(error_line([] { parse_poset("3\n1 4\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_poset("3\n1\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_poset("three\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_poset(""); }), 1u);
  try {
    parse_poset("2\n1 2\n2 1\n");
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.axiom(), "antisymmetry");
  }
  try {
    parse_poset("2\n1 1\n");
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.axiom(), "irreflexivity");
  }
}

TEST(ParseArrangement, HeadersAndRationals) {
  const Arrangement a = parse_arrangement("d=2\n1/2 1 3/4\n0 2 1\n");
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].offset(), Rational(3, 2));
  EXPECT_TRUE(parse_arrangement("d=3\n").empty());
  EXPECT_EQ(parse_arrangement("2\n1 0 0\n").size(), 1u);
}

TEST(ParseArrangement, Errors) {
  EXPECT_EQ(error_line([] { parse_arrangement("2\n1 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_arrangement("2\n\n# c\n0 0 1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_arrangement("2\n1 x 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_arrangement("d=0\n"); }), 1u);
}

TEST(ParsePolytope, VerticesAndErrors) {
  const Polytope p = parse_polytope("2\n0 0\n1/2 0\n0 1/2\n");
  EXPECT_EQ(p.vertices().size(), 3u);
  EXPECT_EQ(p.denominator(), 2);
  EXPECT_EQ(error_line([] { parse_polytope("2\n0 0\n1\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_polytope("2\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_polytope("0\n"); }), 1u);
}

TEST(ParseGraph, EdgesLoopsAndErrors) {
  const Graph g = parse_graph("3\n1 2\n2 1\n3 3\n");
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_TRUE(g.has_loop());
  EXPECT_EQ(parse_graph("# no edges\n4\n").edges().size(), 0u);
  EXPECT_EQ(error_line([] { parse_graph("3\n1 2\n0 1\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_graph("3\n1 2 3\n"); }), 2u);
}
