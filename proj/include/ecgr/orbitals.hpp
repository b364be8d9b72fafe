#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ecgr/perm.hpp"

namespace ecgr {

using PointPair = std::pair<Point, Point>;

/// Orbits of a permutation group acting on ordered pairs of distinct points
/// (via (v, w) -> (a(v), a(w))) and on unordered pairs, plus the pairing
/// involution: orbital i is paired with the orbital holding its reversed
/// pairs, and is self-paired when that is i itself.
///
/// Orbitals are indexed by sorting their lexicographically minimal pairs, so
/// orbital 0 always contains the smallest moved pair.
struct OrbitalStructure {
  unsigned degree = 0;
  std::vector<std::vector<PointPair>> or_orbitals;  // ordered pairs, each sorted
  std::vector<std::vector<PointPair>> nor_orbitals; // unordered pairs as (v, w), v < w
  std::vector<unsigned> pairing;                    // involution on or-orbital indices

  unsigned or_orbital_count() const {
    return static_cast<unsigned>(or_orbitals.size());
  }
  unsigned nor_orbital_count() const {
    return static_cast<unsigned>(nor_orbitals.size());
  }

  /// Orbital index of the ordered pair (v, w), v != w.
  unsigned or_index(Point v, Point w) const;

  /// Orbital index of the unordered pair {v, w}, v != w.
  unsigned nor_index(Point v, Point w) const;

  bool is_self_paired(unsigned orbital) const;
  bool has_non_self_paired() const;
  std::optional<unsigned> first_non_self_paired() const;

  // Dense n*n index tables, filled by compute_orbitals.
  std::vector<unsigned> or_id;
  std::vector<unsigned> nor_id;
};

/// Both pair-orbit partitions of a group of degree >= 2, with the pairing
/// involution. The ordered and unordered partitions are computed by two
/// independent breadth-first sweeps, not derived from one another.
OrbitalStructure compute_orbitals(const PermGroup& g);

/// True iff p maps every orbital of s onto itself.
bool preserves_all_or_orbitals(const Permutation& p, const OrbitalStructure& s);

/// True iff p swaps every pair of distinct paired orbitals of s, i.e. for all
/// i with pairing[i] != i the image of orbital i is exactly orbital
/// pairing[i]. Vacuously true when every orbital is self-paired.
bool pairs_all_paired_orbitals(const Permutation& p, const OrbitalStructure& s);

} // namespace ecgr
