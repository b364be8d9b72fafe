#include "ecgr/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>
#include <utility>

namespace ecgr {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull; // FNV-1a
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Breadth-first closure of {id} under left multiplication by the
/// generators. Enough for finite groups: inverses are positive powers.
std::vector<Permutation> close_under_composition(
    unsigned degree, const std::vector<Permutation>& generators,
    std::size_t cap) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> frontier;
  frontier.emplace_back(degree);
  seen.insert(frontier.front());
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Permutation current = frontier[head]; // copy: frontier may reallocate
    for (const Permutation& g : generators) {
      Permutation next = compose(g, current);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw BudgetError("group order exceeds the element cap of " +
                            std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

/// Greedy small generating set: walk the sorted elements and keep those not
/// yet generated by the kept ones.
std::vector<Permutation> greedy_generating_set(
    unsigned degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> generated;
  generated.emplace(degree);
  for (const Permutation& e : elements) {
    if (generated.count(e))
      continue;
    gens.push_back(e);
    auto closed = close_under_composition(degree, gens, elements.size());
    generated = {closed.begin(), closed.end()};
    if (generated.size() == elements.size())
      break;
  }
  return gens;
}

} // namespace

Permutation::Permutation(unsigned degree) : images_(degree) {
  if (degree == 0)
    throw Error("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty())
    throw Error("permutation degree must be positive");
  std::vector<bool> hit(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x])
      throw Error("image table is not a bijection");
    hit[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(degree());
  for (Point x = 0; x < degree(); ++x)
    inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    out += '(';
    Point v = start;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      out += std::to_string(v);
      seen[v] = true;
      v = images_[v];
      first = false;
    } while (v != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::parse_cycles(std::string_view text, unsigned degree) {
  if (degree == 0)
    throw ParseError("permutation degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_blank();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<Point> cycle;
    skip_blank();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point in cycle notation: " +
                         std::string(text));
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > 1'000'000)
          throw ParseError("point out of range in cycle notation");
        ++i;
      }
      if (value >= degree)
        throw ParseError("point " + std::to_string(value) +
                         " exceeds degree " + std::to_string(degree));
      auto point = static_cast<Point>(value);
      if (used[point])
        throw ParseError("point " + std::to_string(point) +
                         " occurs twice in cycle notation");
      used[point] = true;
      cycle.push_back(point);
      skip_blank();
    }
    if (i >= text.size())
      throw ParseError("unterminated cycle in: " + std::string(text));
    ++i; // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_blank();
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error("cannot compose permutations of degrees " +
                std::to_string(p.degree()) + " and " +
                std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    images[x] = p(q(x));
  return Permutation(std::move(images));
}

struct PermGroup::ElementCache {
  std::mutex mutex;
  bool ready = false;
  std::vector<Permutation> elements;
};

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators,
                     std::size_t element_cap)
    : degree_(degree),
      generators_(std::move(generators)),
      element_cap_(element_cap),
      cache_(std::make_shared<ElementCache>()) {
  if (degree_ == 0)
    throw Error("group degree must be positive");
  if (element_cap_ == 0)
    throw Error("element cap must be positive");
  for (const Permutation& g : generators_)
    if (g.degree() != degree_)
      throw Error("generator degree " + std::to_string(g.degree()) +
                  " does not match group degree " + std::to_string(degree_));
}

PermGroup PermGroup::identity(unsigned degree) {
  return PermGroup(degree, {});
}

PermGroup PermGroup::from_elements(unsigned degree,
                                   std::vector<Permutation> elements) {
  for (const Permutation& e : elements)
    if (e.degree() != degree)
      throw Error("element degree does not match group degree");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw Error("element set does not contain the identity");
  PermGroup group(degree, greedy_generating_set(degree, elements),
                  std::max(kDefaultElementCap, elements.size()));
  group.cache_->elements = std::move(elements);
  group.cache_->ready = true;
  return group;
}

const std::vector<Permutation>& PermGroup::elements() const {
  ElementCache& cache = *cache_;
  std::scoped_lock lock(cache.mutex);
  if (!cache.ready) {
    cache.elements = close_under_composition(degree_, generators_, element_cap_);
    cache.ready = true;
  }
  return cache.elements;
}

std::uint64_t PermGroup::order() const {
  return static_cast<std::uint64_t>(elements().size());
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw Error("membership test degree mismatch");
  const auto& all = elements();
  return std::binary_search(all.begin(), all.end(), p);
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree_, false);
  for (Point start = 0; start < degree_; ++start) {
    if (seen[start])
      continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const Permutation& g : generators_) {
        Point next = g(orbit[head]);
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool PermGroup::is_regular() const {
  return is_transitive() && order() == degree_;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (compose(generators_[i], generators_[j]) !=
          compose(generators_[j], generators_[i]))
        return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  return degree_ == other.degree_ && elements() == other.elements();
}

PermGroup generate(std::vector<Permutation> generators, std::size_t element_cap) {
  if (generators.empty())
    throw Error("generate requires a nonempty generator list");
  unsigned degree = generators.front().degree();
  return PermGroup(degree, std::move(generators), element_cap);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                         unsigned max_degree) {
  if (a.degree() == 1)
    return b;
  if (b.degree() == 1)
    return a;
  const std::uint64_t product_degree =
      static_cast<std::uint64_t>(a.degree()) * b.degree();
  if (product_degree > max_degree)
    throw BudgetError("product degree " + std::to_string(product_degree) +
                      " exceeds the limit of " + std::to_string(max_degree));
  const unsigned n = static_cast<unsigned>(product_degree);
  const unsigned m = b.degree();

  std::vector<Permutation> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const Permutation& g : a.generators()) {
    std::vector<Point> images(n);
    for (Point x = 0; x < a.degree(); ++x)
      for (Point y = 0; y < m; ++y)
        images[x * m + y] = g(x) * m + y;
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& h : b.generators()) {
    std::vector<Point> images(n);
    for (Point x = 0; x < a.degree(); ++x)
      for (Point y = 0; y < m; ++y)
        images[x * m + y] = x * m + h(y);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens),
                   std::max(a.element_cap(), b.element_cap()));
}

} // namespace ecgr
