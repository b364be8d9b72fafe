#pragma once

#include <string>
#include <vector>

#include "ecgr/orbitals.hpp"

namespace ecgr {

/// Complete undirected graph on n vertices with a total edge coloring into
/// {0, ..., k-1}; every color must actually be used. Immutable.
class ColoredGraph {
public:
  /// colors is a dense row-major n*n table; it must be symmetric off the
  /// diagonal (diagonal entries are ignored and normalized to 0).
  ColoredGraph(unsigned n, unsigned k, std::vector<unsigned> colors);

  unsigned vertex_count() const { return n_; }
  unsigned color_count() const { return k_; }
  unsigned color(Point v, Point w) const { return colors_[v * n_ + w]; }

private:
  unsigned n_;
  unsigned k_;
  std::vector<unsigned> colors_;
};

/// Complete digraph on n vertices with a total arc coloring into
/// {0, ..., k-1}; every color must actually be used. Immutable.
class ColoredDigraph {
public:
  ColoredDigraph(unsigned n, unsigned k, std::vector<unsigned> colors);

  unsigned vertex_count() const { return n_; }
  unsigned color_count() const { return k_; }
  unsigned color(Point v, Point w) const { return colors_[v * n_ + w]; }

private:
  unsigned n_;
  unsigned k_;
  std::vector<unsigned> colors_;
};

/// Complete graph whose edge {v, w} is colored by the index of the unordered
/// pair orbit of {v, w}. Requires degree >= 2.
ColoredGraph build_g(const PermGroup& a);
ColoredGraph build_g(const OrbitalStructure& s);

/// Complete digraph whose arc (v, w) is colored by the index of the ordered
/// pair orbit of (v, w). Requires degree >= 2.
ColoredDigraph build_gr(const PermGroup& a);
ColoredDigraph build_gr(const OrbitalStructure& s);

/// True iff p preserves the color of every edge (resp. arc).
bool is_automorphism(const ColoredGraph& g, const Permutation& p);
bool is_automorphism(const ColoredDigraph& g, const Permutation& p);

/// Graphviz DOT rendering with color labels, edges in ascending order.
std::string to_dot(const ColoredGraph& g);
std::string to_dot(const ColoredDigraph& g);

/// Line-based text format, one "v w color" triple per line, ascending.
/// Graphs list each unordered edge once with v < w.
std::string to_edge_list(const ColoredGraph& g);
std::string to_edge_list(const ColoredDigraph& g);

} // namespace ecgr
