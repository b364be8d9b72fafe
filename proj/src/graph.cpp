#include "ecgr/graph.hpp"

#include <algorithm>

namespace ecgr {

namespace {

void check_colors(unsigned n, unsigned k, std::vector<unsigned>& colors,
                  bool symmetric) {
  if (n == 0)
    throw Error("graph needs at least one vertex");
  if (colors.size() != static_cast<std::size_t>(n) * n)
    throw Error("color table size does not match vertex count");
  if (n >= 2 && k == 0)
    throw Error("a graph with edges needs at least one color");
  std::vector<bool> used(k, false);
  for (Point v = 0; v < n; ++v) {
    colors[static_cast<std::size_t>(v) * n + v] = 0; // diagonal normalized
    for (Point w = 0; w < n; ++w) {
      if (v == w)
        continue;
      unsigned c = colors[static_cast<std::size_t>(v) * n + w];
      if (c >= k)
        throw Error("edge color out of range");
      if (symmetric && c != colors[static_cast<std::size_t>(w) * n + v])
        throw Error("edge coloring must be symmetric");
      used[c] = true;
    }
  }
  for (unsigned c = 0; c < k; ++c)
    if (n >= 2 && !used[c])
      throw Error("color " + std::to_string(c) + " is never used");
}

template <typename Structure>
std::vector<unsigned> orbital_color_table(const Structure& ids, unsigned n) {
  std::vector<unsigned> colors(static_cast<std::size_t>(n) * n, 0);
  for (Point v = 0; v < n; ++v)
    for (Point w = 0; w < n; ++w)
      if (v != w)
        colors[static_cast<std::size_t>(v) * n + w] =
            ids[static_cast<std::size_t>(v) * n + w];
  return colors;
}

template <typename Graph>
bool preserves_colors(const Graph& g, const Permutation& p, bool symmetric) {
  if (p.degree() != g.vertex_count())
    throw Error("permutation degree does not match vertex count");
  const unsigned n = g.vertex_count();
  for (Point v = 0; v < n; ++v)
    for (Point w = symmetric ? v + 1 : 0; w < n; ++w)
      if (v != w && g.color(p(v), p(w)) != g.color(v, w))
        return false;
  return true;
}

} // namespace

ColoredGraph::ColoredGraph(unsigned n, unsigned k, std::vector<unsigned> colors)
    : n_(n), k_(k), colors_(std::move(colors)) {
  check_colors(n_, k_, colors_, /*symmetric=*/true);
}

ColoredDigraph::ColoredDigraph(unsigned n, unsigned k,
                               std::vector<unsigned> colors)
    : n_(n), k_(k), colors_(std::move(colors)) {
  check_colors(n_, k_, colors_, /*symmetric=*/false);
}

ColoredGraph build_g(const PermGroup& a) { return build_g(compute_orbitals(a)); }

ColoredGraph build_g(const OrbitalStructure& s) {
  return ColoredGraph(s.degree, s.nor_orbital_count(),
                      orbital_color_table(s.nor_id, s.degree));
}

ColoredDigraph build_gr(const PermGroup& a) {
  return build_gr(compute_orbitals(a));
}

ColoredDigraph build_gr(const OrbitalStructure& s) {
  return ColoredDigraph(s.degree, s.or_orbital_count(),
                        orbital_color_table(s.or_id, s.degree));
}

bool is_automorphism(const ColoredGraph& g, const Permutation& p) {
  return preserves_colors(g, p, /*symmetric=*/true);
}

bool is_automorphism(const ColoredDigraph& g, const Permutation& p) {
  return preserves_colors(g, p, /*symmetric=*/false);
}

std::string to_dot(const ColoredGraph& g) {
  std::string out = "graph G {\n";
  for (Point v = 0; v < g.vertex_count(); ++v)
    for (Point w = v + 1; w < g.vertex_count(); ++w)
      out += "  " + std::to_string(v) + " -- " + std::to_string(w) +
             " [label=" + std::to_string(g.color(v, w)) + "];\n";
  return out + "}\n";
}

std::string to_dot(const ColoredDigraph& g) {
  std::string out = "digraph G {\n";
  for (Point v = 0; v < g.vertex_count(); ++v)
    for (Point w = 0; w < g.vertex_count(); ++w)
      if (v != w)
        out += "  " + std::to_string(v) + " -> " + std::to_string(w) +
               " [label=" + std::to_string(g.color(v, w)) + "];\n";
  return out + "}\n";
}

std::string to_edge_list(const ColoredGraph& g) {
  std::string out;
  for (Point v = 0; v < g.vertex_count(); ++v)
    for (Point w = v + 1; w < g.vertex_count(); ++w)
      out += std::to_string(v) + " " + std::to_string(w) + " " +
             std::to_string(g.color(v, w)) + "\n";
  return out;
}

std::string to_edge_list(const ColoredDigraph& g) {
  std::string out;
  for (Point v = 0; v < g.vertex_count(); ++v)
    for (Point w = 0; w < g.vertex_count(); ++w)
      if (v != w)
        out += std::to_string(v) + " " + std::to_string(w) + " " +
               std::to_string(g.color(v, w)) + "\n";
  return out;
}

} // namespace ecgr
