#include "ecgr/aut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace ecgr {

namespace {

// Adapters so one search serves both graph flavors. `code` feeds the
// refinement signatures; `consistent` is the partial-assignment check.
struct GraphView {
  const ColoredGraph& g;
  unsigned n() const { return g.vertex_count(); }
  unsigned code(Point v, Point w) const { return g.color(v, w); }
  bool consistent(Point v, Point u, Point iv, Point iu) const {
    return g.color(v, u) == g.color(iv, iu);
  }
};

struct DigraphView {
  const ColoredDigraph& g;
  unsigned n() const { return g.vertex_count(); }
  unsigned code(Point v, Point w) const {
    return g.color(v, w) * g.color_count() + g.color(w, v);
  }
  bool consistent(Point v, Point u, Point iv, Point iu) const {
    return g.color(v, u) == g.color(iv, iu) && g.color(u, v) == g.color(iu, iv);
  }
};

/// Iterated color-degree refinement. Each round keys every vertex by its
/// current class plus the sorted multiset of (class, color code) over the
/// other vertices, then renumbers classes by sorted key. Fixpoint when the
/// class count stops growing. Class ids are canonical, so any automorphism
/// maps each class onto itself.
template <typename View>
std::vector<unsigned> refine_classes(const View& view) {
  const unsigned n = view.n();
  std::vector<unsigned> cls(n, 0);
  unsigned count = 1;
  for (;;) {
    using Key = std::pair<unsigned, std::vector<std::pair<unsigned, unsigned>>>;
    std::vector<Key> keys(n);
    for (Point v = 0; v < n; ++v) {
      keys[v].first = cls[v];
      keys[v].second.reserve(n - 1);
      for (Point w = 0; w < n; ++w)
        if (w != v)
          keys[v].second.emplace_back(cls[w], view.code(v, w));
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    std::map<Key, unsigned> ids;
    for (Point v = 0; v < n; ++v)
      ids.emplace(keys[v], 0);
    unsigned next = 0;
    for (auto& [key, id] : ids)
      id = next++;
    for (Point v = 0; v < n; ++v)
      cls[v] = ids[keys[v]];
    if (next == count)
      return cls;
    count = next;
  }
}

template <typename View>
PermGroup search_automorphisms(const View& view, const Limits& limits) {
  const unsigned n = view.n();
  if (n > limits.max_aut_vertices)
    throw BudgetError("vertex count " + std::to_string(n) +
                      " exceeds the automorphism search limit of " +
                      std::to_string(limits.max_aut_vertices));
  if (n == 1)
    return PermGroup::identity(1);

  const std::vector<unsigned> cls = refine_classes(view);

  // Candidate images per vertex: its own refinement class.
  const unsigned class_count = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<Point>> members(class_count);
  for (Point v = 0; v < n; ++v)
    members[cls[v]].push_back(v);

  // Static assignment order: smallest cells first, minimal vertex first.
  std::vector<unsigned> cell_order(class_count);
  std::iota(cell_order.begin(), cell_order.end(), 0u);
  std::sort(cell_order.begin(), cell_order.end(), [&](unsigned a, unsigned b) {
    if (members[a].size() != members[b].size())
      return members[a].size() < members[b].size();
    return members[a].front() < members[b].front();
  });
  std::vector<Point> order;
  order.reserve(n);
  for (unsigned c : cell_order)
    order.insert(order.end(), members[c].begin(), members[c].end());

  std::vector<Permutation> found;
  std::vector<Point> image(n, 0);
  std::vector<bool> used(n, false);

  auto dfs = [&](auto&& self, unsigned level) -> void {
    if (level == n) {
      if (found.size() >= limits.max_group_elements)
        throw BudgetError("automorphism count exceeds the element cap of " +
                          std::to_string(limits.max_group_elements));
      found.emplace_back(image);
      return;
    }
    const Point v = order[level];
    for (Point w : members[cls[v]]) {
      if (used[w])
        continue;
      bool ok = true;
      for (unsigned prior = 0; prior < level && ok; ++prior) {
        const Point u = order[prior];
        ok = view.consistent(v, u, w, image[u]);
      }
      if (!ok)
        continue;
      used[w] = true;
      image[v] = w;
      self(self, level + 1);
      used[w] = false;
    }
  };
  dfs(dfs, 0);

  return PermGroup::from_elements(n, std::move(found));
}

template <typename View>
PermGroup filter_all_permutations(const View& view) {
  const unsigned n = view.n();
  if (n > 8)
    throw Error("brute-force filter is limited to 8 vertices");
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<Permutation> found;
  do {
    Permutation p{images};
    if (is_automorphism(view.g, p))
      found.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return PermGroup::from_elements(n, std::move(found));
}

} // namespace

PermGroup automorphism_group(const ColoredGraph& g, const Limits& limits) {
  return search_automorphisms(GraphView{g}, limits);
}

PermGroup automorphism_group(const ColoredDigraph& g, const Limits& limits) {
  return search_automorphisms(DigraphView{g}, limits);
}

PermGroup brute_force_automorphisms(const ColoredGraph& g) {
  return filter_all_permutations(GraphView{g});
}

PermGroup brute_force_automorphisms(const ColoredDigraph& g) {
  return filter_all_permutations(DigraphView{g});
}

} // namespace ecgr
