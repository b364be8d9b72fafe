#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecgr/catalog.hpp"
#include "ecgr/graph.hpp"

using namespace ecgr;

namespace {

PermGroup cyclic(unsigned n) {
  std::vector<Point> images(n);
  for (Point x = 0; x < n; ++x)
    images[x] = (x + 1) % n;
  return generate({Permutation(std::move(images))});
}

} // namespace

TEST_CASE("colored graph validation") {
  // 2 vertices, one edge of color 0.
  ColoredGraph k2(2, 1, {0, 0, 0, 0});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.color_count() == 1);
  CHECK(k2.color(0, 1) == 0);

  // Wrong table size.
  CHECK_THROWS_AS(ColoredGraph(2, 1, {0, 0}), Error);
  // Asymmetric off-diagonal entries.
  CHECK_THROWS_AS(ColoredGraph(2, 2, {0, 1, 0, 0}), Error);
  // Color out of range.
  CHECK_THROWS_AS(ColoredGraph(2, 1, {0, 1, 1, 0}), Error);
  // Color 1 requested but never used.
  CHECK_THROWS_AS(ColoredGraph(2, 2, {0, 0, 0, 0}), Error);
  // Diagonal entries are normalized away.
  ColoredGraph diag(2, 1, {7, 0, 0, 9});
  CHECK(diag.color(0, 0) == 0);
  CHECK(diag.color(1, 1) == 0);
}

TEST_CASE("colored digraph validation") {
  ColoredDigraph d(2, 2, {0, 0, 1, 0});
  CHECK(d.color(0, 1) == 0);
  CHECK(d.color(1, 0) == 1);
  CHECK_THROWS_AS(ColoredDigraph(2, 3, {0, 0, 1, 0}), Error);
}

TEST_CASE("graph of a four-cycle: square edges and diagonals") {
  ColoredGraph g = build_g(cyclic(4));
  CHECK(g.vertex_count() == 4);
  CHECK(g.color_count() == 2);
  CHECK(g.color(0, 1) == 0);
  CHECK(g.color(1, 2) == 0);
  CHECK(g.color(2, 3) == 0);
  CHECK(g.color(0, 3) == 0);
  CHECK(g.color(0, 2) == 1);
  CHECK(g.color(1, 3) == 1);
  CHECK(g.color(2, 0) == 1); // symmetric
}

TEST_CASE("digraph of a three-cycle: forward and backward arcs") {
  ColoredDigraph g = build_gr(cyclic(3));
  CHECK(g.color_count() == 2);
  CHECK(g.color(0, 1) == 0);
  CHECK(g.color(1, 2) == 0);
  CHECK(g.color(2, 0) == 0);
  CHECK(g.color(1, 0) == 1);
  CHECK(g.color(0, 2) == 1);
}

TEST_CASE("identity group gives an all-distinct coloring") {
  ColoredGraph g = build_g(PermGroup::identity(3));
  CHECK(g.color_count() == 3);
  CHECK(g.color(0, 1) != g.color(0, 2));
  CHECK(g.color(0, 1) != g.color(1, 2));
  ColoredDigraph d = build_gr(PermGroup::identity(3));
  CHECK(d.color_count() == 6);
}

TEST_CASE("building from a precomputed orbital structure matches") {
  PermGroup g = cyclic(4);
  OrbitalStructure s = compute_orbitals(g);
  ColoredGraph from_group = build_g(g);
  ColoredGraph from_structure = build_g(s);
  for (Point v = 0; v < 4; ++v)
    for (Point w = 0; w < 4; ++w)
      CHECK(from_group.color(v, w) == from_structure.color(v, w));
}

TEST_CASE("group elements are automorphisms of their own graphs") {
  for (const char* spec :
       {"cyclic(5)", "symmetric(3)", "dihedral(4)", "example7"}) {
    CAPTURE(spec);
    PermGroup g = make(spec).group;
    ColoredGraph graph = build_g(g);
    ColoredDigraph digraph = build_gr(g);
    for (const Permutation& p : g.elements()) {
      CHECK(is_automorphism(graph, p));
      CHECK(is_automorphism(digraph, p));
    }
  }
}

TEST_CASE("a transposition fixes the graph but not the digraph of a 3-cycle") {
  PermGroup c3 = cyclic(3);
  Permutation t = Permutation::parse_cycles("(1 2)", 3);
  CHECK(is_automorphism(build_g(c3), t));
  CHECK_FALSE(is_automorphism(build_gr(c3), t));
  CHECK_THROWS_AS(is_automorphism(build_g(c3), Permutation(4)), Error);
}

TEST_CASE("dot rendering") {
  CHECK(to_dot(ColoredGraph(2, 1, {0, 0, 0, 0})) ==
        "graph G {\n  0 -- 1 [label=0];\n}\n");
  CHECK(to_dot(ColoredDigraph(2, 2, {0, 0, 1, 0})) ==
        "digraph G {\n  0 -> 1 [label=0];\n  1 -> 0 [label=1];\n}\n");
}

TEST_CASE("edge list rendering") {
  CHECK(to_edge_list(build_g(cyclic(4))) ==
        "0 1 0\n0 2 1\n0 3 0\n1 2 0\n1 3 1\n2 3 0\n");
  CHECK(to_edge_list(build_gr(PermGroup::identity(2))) == "0 1 0\n1 0 1\n");
}

TEST_CASE("graphs need at least two vertices") {
  CHECK_THROWS_AS(build_g(PermGroup::identity(1)), Error);
  CHECK_THROWS_AS(ColoredGraph(0, 0, {}), Error);
}
