#pragma once

#include "ecgr/graph.hpp"
#include "ecgr/limits.hpp"

namespace ecgr {

/// Exact automorphism group of a colored complete graph or digraph.
///
/// The vertex partition is refined by color-degree signatures until it is
/// equitable, then a backtracking search assigns images cell by cell
/// (smallest cell first, minimal vertex first) with partial color-consistency
/// checks. Every automorphism is enumerated; the element count is bounded by
/// limits.max_group_elements and the vertex count by limits.max_aut_vertices.
/// Deterministic: the same input always yields the same group.
PermGroup automorphism_group(const ColoredGraph& g, const Limits& limits = {});
PermGroup automorphism_group(const ColoredDigraph& g, const Limits& limits = {});

/// Independent oracle: filters all n! permutations through is_automorphism.
/// Only for n <= 8.
PermGroup brute_force_automorphisms(const ColoredGraph& g);
PermGroup brute_force_automorphisms(const ColoredDigraph& g);

} // namespace ecgr
