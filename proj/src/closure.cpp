#include "ecgr/closure.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <mutex>

namespace ecgr {

namespace {

// Cache key: what the closure mathematically depends on — the kind, the
// degree, and the exact element set.
struct CacheKey {
  ClosureKind kind;
  unsigned degree;
  std::vector<std::vector<Point>> elements;

  auto operator<=>(const CacheKey&) const = default;
};

CacheKey make_key(ClosureKind kind, const PermGroup& a) {
  CacheKey key{kind, a.degree(), {}};
  key.elements.reserve(a.elements().size());
  for (const Permutation& p : a.elements())
    key.elements.push_back(p.images());
  return key;
}

std::shared_ptr<const ClosureResult> compute_closure(ClosureKind kind,
                                                     const PermGroup& a,
                                                     const Limits& limits) {
  PermGroup original =
      PermGroup::from_elements(a.degree(), a.elements());
  PermGroup closed = [&] {
    if (a.degree() == 1)
      return original; // no pairs to color; the group is its own closure
    if (kind == ClosureKind::graph)
      return automorphism_group(build_g(a), limits);
    return automorphism_group(build_gr(a), limits);
  }();
  std::vector<Permutation> extra;
  std::set_difference(closed.elements().begin(), closed.elements().end(),
                      original.elements().begin(), original.elements().end(),
                      std::back_inserter(extra));
  return std::make_shared<const ClosureResult>(
      ClosureResult{std::move(original), std::move(closed), std::move(extra),
                    kind});
}

/// Get-or-compute with per-key futures: concurrent callers of the same key
/// block on one computation, different keys proceed independently. Entries
/// live for the process lifetime, so returned references stay valid.
const ClosureResult& memoized_closure(ClosureKind kind, const PermGroup& a,
                                      const Limits& limits) {
  static std::mutex mutex;
  static std::map<CacheKey, std::shared_future<std::shared_ptr<const ClosureResult>>>
      cache;

  CacheKey key = make_key(kind, a);
  std::shared_future<std::shared_ptr<const ClosureResult>> entry;
  std::promise<std::shared_ptr<const ClosureResult>> mine;
  bool owner = false;
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
      entry = mine.get_future().share();
      cache.emplace(key, entry);
      owner = true;
    } else {
      entry = it->second;
    }
  }
  if (owner) {
    try {
      mine.set_value(compute_closure(kind, a, limits));
    } catch (...) {
      // Failures are not results: evict so a retry (say with a larger
      // budget) can recompute, then hand the error to current waiters.
      {
        std::scoped_lock lock(mutex);
        cache.erase(key);
      }
      mine.set_exception(std::current_exception());
    }
  }
  return *entry.get(); // rethrows the owner's exception for every waiter
}

} // namespace

const ClosureResult& star_closure(const PermGroup& a, const Limits& limits) {
  return memoized_closure(ClosureKind::graph, a, limits);
}

const ClosureResult& two_closure(const PermGroup& a, const Limits& limits) {
  return memoized_closure(ClosureKind::digraph, a, limits);
}

bool in_gr(const PermGroup& a, const Limits& limits) {
  return star_closure(a, limits).extra.empty();
}

bool in_dgr(const PermGroup& a, const Limits& limits) {
  return two_closure(a, limits).extra.empty();
}

} // namespace ecgr
