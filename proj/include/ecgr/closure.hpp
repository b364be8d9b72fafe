#pragma once

#include <vector>

#include "ecgr/aut.hpp"

namespace ecgr {

enum class ClosureKind { graph, digraph };

/// A group together with its closure: the full automorphism group of the
/// orbital-colored complete graph (kind graph) or digraph (kind digraph)
/// built from it. extra holds the closure elements missing from the original,
/// sorted by image table. For degree 1 the closure is the group itself.
struct ClosureResult {
  PermGroup original;
  PermGroup closure;
  std::vector<Permutation> extra;
  ClosureKind kind;
};

/// Automorphism group of the edge-colored graph of a. Contains a; computing
/// it again on the result is a fixed point. Results are memoized per element
/// set; the returned reference stays valid for the process lifetime.
const ClosureResult& star_closure(const PermGroup& a, const Limits& limits = {});

/// Automorphism group of the arc-colored digraph of a. Contained in the
/// graph closure of a.
const ClosureResult& two_closure(const PermGroup& a, const Limits& limits = {});

/// True iff a equals the automorphism group of its edge-colored graph.
bool in_gr(const PermGroup& a, const Limits& limits = {});

/// True iff a equals the automorphism group of its arc-colored digraph.
bool in_dgr(const PermGroup& a, const Limits& limits = {});

} // namespace ecgr
