#include "ecgr/orbitals.hpp"

#include <algorithm>
#include <numeric>

namespace ecgr {

namespace {

constexpr unsigned kUnassigned = ~0u;

/// Partitions the cells wired by `neighbors` into orbits. `cells` enumerates
/// the valid flat indices; neighbors(cell, generator) yields the image cell.
template <typename NeighborFn>
void sweep_orbits(const std::vector<std::size_t>& cells,
                  std::size_t table_size,
                  const std::vector<Permutation>& generators,
                  NeighborFn neighbors, std::vector<unsigned>& ids) {
  ids.assign(table_size, kUnassigned);
  unsigned next_id = 0;
  std::vector<std::size_t> queue;
  for (std::size_t seed : cells) {
    if (ids[seed] != kUnassigned)
      continue;
    const unsigned orbit_id = next_id++;
    ids[seed] = orbit_id;
    queue.assign(1, seed);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const Permutation& g : generators) {
        std::size_t image = neighbors(queue[head], g);
        if (ids[image] == kUnassigned) {
          ids[image] = orbit_id;
          queue.push_back(image);
        }
      }
  }
}

} // namespace

unsigned OrbitalStructure::or_index(Point v, Point w) const {
  if (v >= degree || w >= degree || v == w)
    throw Error("ordered pair out of range");
  return or_id[static_cast<std::size_t>(v) * degree + w];
}

unsigned OrbitalStructure::nor_index(Point v, Point w) const {
  if (v >= degree || w >= degree || v == w)
    throw Error("unordered pair out of range");
  return nor_id[static_cast<std::size_t>(v) * degree + w];
}

bool OrbitalStructure::is_self_paired(unsigned orbital) const {
  if (orbital >= pairing.size())
    throw Error("orbital index out of range");
  return pairing[orbital] == orbital;
}

bool OrbitalStructure::has_non_self_paired() const {
  return first_non_self_paired().has_value();
}

std::optional<unsigned> OrbitalStructure::first_non_self_paired() const {
  for (unsigned i = 0; i < pairing.size(); ++i)
    if (pairing[i] != i)
      return i;
  return std::nullopt;
}

OrbitalStructure compute_orbitals(const PermGroup& g) {
  const unsigned n = g.degree();
  if (n < 2)
    throw Error("pair orbits require degree >= 2");

  OrbitalStructure s;
  s.degree = n;
  const std::size_t table = static_cast<std::size_t>(n) * n;
  const auto& gens = g.generators();

  // Ordered pairs: one sweep over all (v, w) with v != w.
  std::vector<std::size_t> ordered_cells;
  ordered_cells.reserve(table - n);
  for (Point v = 0; v < n; ++v)
    for (Point w = 0; w < n; ++w)
      if (v != w)
        ordered_cells.push_back(static_cast<std::size_t>(v) * n + w);
  sweep_orbits(ordered_cells, table, gens,
               [n](std::size_t cell, const Permutation& p) {
                 Point v = static_cast<Point>(cell / n);
                 Point w = static_cast<Point>(cell % n);
                 return static_cast<std::size_t>(p(v)) * n + p(w);
               },
               s.or_id);

  // Unordered pairs: an independent sweep seeded only at v < w, with images
  // normalized back below the diagonal.
  std::vector<std::size_t> unordered_cells;
  unordered_cells.reserve((table - n) / 2);
  for (Point v = 0; v < n; ++v)
    for (Point w = v + 1; w < n; ++w)
      unordered_cells.push_back(static_cast<std::size_t>(v) * n + w);
  sweep_orbits(unordered_cells, table, gens,
               [n](std::size_t cell, const Permutation& p) {
                 Point v = p(static_cast<Point>(cell / n));
                 Point w = p(static_cast<Point>(cell % n));
                 if (v > w)
                   std::swap(v, w);
                 return static_cast<std::size_t>(v) * n + w;
               },
               s.nor_id);
  // Mirror the unordered ids so both (v, w) and (w, v) resolve.
  for (Point v = 0; v < n; ++v)
    for (Point w = v + 1; w < n; ++w)
      s.nor_id[static_cast<std::size_t>(w) * n + v] =
          s.nor_id[static_cast<std::size_t>(v) * n + w];

  // Renumber both partitions so indices follow the lexicographically
  // minimal pair of each orbital, and collect the sorted pair lists.
  auto renumber = [n](std::vector<unsigned>& ids,
                      const std::vector<std::size_t>& cells) {
    std::vector<std::size_t> min_cell;
    for (std::size_t cell : cells) {
      unsigned id = ids[cell];
      if (id >= min_cell.size())
        min_cell.resize(id + 1, ~std::size_t{0});
      min_cell[id] = std::min(min_cell[id], cell);
    }
    std::vector<unsigned> by_min(min_cell.size());
    std::iota(by_min.begin(), by_min.end(), 0u);
    std::sort(by_min.begin(), by_min.end(), [&](unsigned a, unsigned b) {
      return min_cell[a] < min_cell[b];
    });
    std::vector<unsigned> rank(min_cell.size());
    for (unsigned pos = 0; pos < by_min.size(); ++pos)
      rank[by_min[pos]] = pos;
    for (std::size_t cell : cells)
      ids[cell] = rank[ids[cell]];
    std::vector<std::vector<PointPair>> orbitals(min_cell.size());
    for (std::size_t cell : cells)
      orbitals[ids[cell]].emplace_back(static_cast<Point>(cell / n),
                                       static_cast<Point>(cell % n));
    return orbitals; // cells ascending => each orbital already sorted
  };
  s.or_orbitals = renumber(s.or_id, ordered_cells);
  s.nor_orbitals = renumber(s.nor_id, unordered_cells);
  for (Point v = 0; v < n; ++v) // restore the mirror after renumbering
    for (Point w = v + 1; w < n; ++w)
      s.nor_id[static_cast<std::size_t>(w) * n + v] =
          s.nor_id[static_cast<std::size_t>(v) * n + w];

  // Pairing involution via the reversed minimal pair of each orbital.
  s.pairing.resize(s.or_orbitals.size());
  for (unsigned i = 0; i < s.or_orbitals.size(); ++i) {
    const PointPair& least = s.or_orbitals[i].front();
    s.pairing[i] = s.or_index(least.second, least.first);
  }
  return s;
}

bool preserves_all_or_orbitals(const Permutation& p, const OrbitalStructure& s) {
  if (p.degree() != s.degree)
    throw Error("permutation degree does not match orbital structure");
  // Orbitals partition the pairs, so pointwise index equality is setwise
  // preservation.
  for (Point v = 0; v < s.degree; ++v)
    for (Point w = 0; w < s.degree; ++w)
      if (v != w && s.or_index(p(v), p(w)) != s.or_index(v, w))
        return false;
  return true;
}

bool pairs_all_paired_orbitals(const Permutation& p, const OrbitalStructure& s) {
  if (p.degree() != s.degree)
    throw Error("permutation degree does not match orbital structure");
  // Paired orbitals have equal size, so the image of orbital i equals
  // orbital pairing[i] iff every image pair lands in it. Both directions of
  // each distinct pair are checked.
  for (unsigned i = 0; i < s.pairing.size(); ++i) {
    if (s.pairing[i] == i)
      continue;
    for (const PointPair& vw : s.or_orbitals[i])
      if (s.or_index(p(vw.first), p(vw.second)) != s.pairing[i])
        return false;
  }
  return true;
}

} // namespace ecgr
