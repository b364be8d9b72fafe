#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ecgr/error.hpp"

namespace ecgr {

using Point = unsigned;

inline constexpr std::size_t kDefaultElementCap = 1'000'000;
inline constexpr unsigned kDefaultMaxProductDegree = 4096;

/// A permutation of {0, ..., degree-1}, stored as its image table.
class Permutation {
public:
  /// Identity permutation of the given positive degree.
  explicit Permutation(unsigned degree);

  /// Takes ownership of an image table; must be a bijection on its index set.
  explicit Permutation(std::vector<Point> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Disjoint cycle notation, fixed points omitted: "(0 1 2)(3 4)".
  /// The identity prints as "()".
  std::string cycles() const;

  /// Parses cycle notation such as "(0 1 2)(3 4)"; points may be separated by
  /// spaces or commas. Fixed points are omitted; "()" or an empty string is
  /// the identity. A point occurring twice is an error.
  static Permutation parse_cycles(std::string_view text, unsigned degree);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

/// Functional composition: (p * q)(x) = p(q(x)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// A permutation group on {0, ..., degree-1} given by generators. The full
/// element set is materialized lazily (breadth-first closure under
/// composition) and cached; the cap bounds how many elements may be stored.
/// Immutable after construction; copies share the element cache.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Permutation> generators,
            std::size_t element_cap = kDefaultElementCap);

  /// The trivial group fixing every point of the given positive degree.
  static PermGroup identity(unsigned degree);

  /// Wraps an already-closed element set (deduplicated and sorted here).
  /// A small generating set is recovered greedily from the sorted elements.
  static PermGroup from_elements(unsigned degree,
                                 std::vector<Permutation> elements);

  unsigned degree() const { return degree_; }
  std::size_t element_cap() const { return element_cap_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// All group elements, sorted by image table. Computed once, then cached.
  const std::vector<Permutation>& elements() const;

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  /// Orbit partition of the point set, each orbit sorted, the list ordered by
  /// minimal element. Uses only the generators.
  std::vector<std::vector<Point>> orbits() const;

  bool is_transitive() const;
  bool is_regular() const;
  bool is_abelian() const;

  /// True when this and other contain exactly the same permutations.
  bool same_group_as(const PermGroup& other) const;

private:
  struct ElementCache;

  unsigned degree_;
  std::vector<Permutation> generators_;
  std::size_t element_cap_;
  std::shared_ptr<ElementCache> cache_;
};

/// Group generated by a nonempty list of same-degree permutations.
PermGroup generate(std::vector<Permutation> generators,
                   std::size_t element_cap = kDefaultElementCap);

/// Direct product acting on the grid V x W, point (x, y) encoded as
/// x * |W| + y. Generators are the factor generators acting on their own
/// coordinate. A factor of degree 1 acts trivially, so the other factor is
/// returned unchanged.
PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                         unsigned max_degree = kDefaultMaxProductDegree);

} // namespace ecgr
