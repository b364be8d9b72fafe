// Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
// Each criterion carries a wall-clock bound that is enforced, not advisory.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ecgr/catalog.hpp"

using namespace ecgr;

namespace {

using Failure = std::optional<std::string>;

PermGroup cyclic(unsigned n) {
  std::vector<Point> images(n);
  for (Point x = 0; x < n; ++x)
    images[x] = (x + 1) % n;
  return generate({Permutation(std::move(images))});
}

/// Independent closure oracle: filter all n! permutations of the product's
/// point set through color preservation on the group's own graph. Usable a
/// little past the library's eight-point brute-force cap.
PermGroup brute_star_closure(const PermGroup& g) {
  const ColoredGraph graph = build_g(g);
  const unsigned n = g.degree();
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> found;
  do {
    Permutation p{std::vector<Point>(images)};
    if (is_automorphism(graph, p))
      found.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return PermGroup::from_elements(n, std::move(found));
}

// --- criterion 1 ------------------------------------------------------------

Failure graph_closure_suite() {
  for (const CatalogEntry& entry : default_catalog()) {
    const unsigned n = entry.group.degree();
    if (n > 7)
      continue;
    const ClosureResult& star = star_closure(entry.group);
    for (const Permutation& p : entry.group.elements())
      if (!star.closure.contains(p))
        return "closure of " + entry.name + " lost a group element";
    if (!star_closure(star.closure).closure.same_group_as(star.closure))
      return "closure of " + entry.name + " is not idempotent";
    if (n <= 6 && !star.closure.same_group_as(brute_star_closure(entry.group)))
      return "closure of " + entry.name + " differs from the n! filter";
  }
  return std::nullopt;
}

// --- criterion 2 ------------------------------------------------------------

Failure digraph_membership_is_orbital_preservation() {
  const std::vector<std::vector<const char*>> pools = {
      {"(0 1)"},
      {"(0 1)", "(0 1 2)"},
      {"(0 1)", "(0 1 2 3)", "(0 1)(2 3)", "(0 1 2)"},
      {"(0 1)", "(0 1 2 3 4)", "(0 1 2)", "(0 1)(2 3)"},
  };
  for (unsigned n = 2; n <= 5; ++n) {
    const auto& pool = pools[n - 2];
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> all_perms;
    do
      all_perms.emplace_back(std::vector<Point>(images));
    while (std::next_permutation(images.begin(), images.end()));

    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
      std::vector<Permutation> gens;
      for (unsigned bit = 0; bit < pool.size(); ++bit)
        if (mask & (1u << bit))
          gens.push_back(Permutation::parse_cycles(pool[bit], n));
      PermGroup a = gens.empty() ? PermGroup::identity(n) : generate(gens);

      const OrbitalStructure orbitals = compute_orbitals(a);
      std::vector<Permutation> preservers;
      for (const Permutation& p : all_perms)
        if (preserves_all_or_orbitals(p, orbitals))
          preservers.push_back(p);

      const bool no_outsider = preservers.size() == a.order();
      if (in_dgr(a) != no_outsider)
        return "membership mismatch at degree " + std::to_string(n) +
               " mask " + std::to_string(mask);
      if (two_closure(a).closure.elements() != preservers)
        return "closure is not the orbital-preserver set at degree " +
               std::to_string(n) + " mask " + std::to_string(mask);
    }
  }
  return std::nullopt;
}

// --- criteria 3 and 4 -------------------------------------------------------

std::vector<std::pair<const CatalogEntry*, const CatalogEntry*>>
catalog_pairs_within(const std::vector<CatalogEntry>& catalog,
                     unsigned max_degree) {
  std::vector<std::pair<const CatalogEntry*, const CatalogEntry*>> pairs;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j)
      if (catalog[i].group.degree() * catalog[j].group.degree() <= max_degree)
        pairs.emplace_back(&catalog[i], &catalog[j]);
  return pairs;
}

Failure digraph_verdicts_match_oracle(const std::vector<CatalogEntry>& catalog) {
  for (auto [a, b] : catalog_pairs_within(catalog, 12)) {
    const PermGroup product = direct_product(a->group, b->group);
    const bool predicted = classify_product_dgr(a->group, b->group);
    if (predicted != two_closure(product).extra.empty())
      return "digraph verdict disagrees on " + a->name + " x " + b->name;
  }
  return std::nullopt;
}

Failure graph_verdicts_match_oracle(const std::vector<CatalogEntry>& catalog) {
  const std::set<std::pair<std::string, std::string>> required = {
      {"identity(2)", "identity(2)"}, {"cyclic(3)", "identity(2)"},
      {"cyclic(3)", "symmetric(2)"},  {"cyclic(3)", "s2_on_3"},
      {"cyclic(3)", "cyclic(3)"},     {"cyclic(4)", "cyclic(3)"},
      {"symmetric(3)", "symmetric(2)"}, {"s2_power(2)", "cyclic(3)"}};
  std::set<std::pair<std::string, std::string>> seen;

  for (auto [a, b] : catalog_pairs_within(catalog, 12)) {
    if (!cross_check(a->group, b->group))
      return "graph verdict disagrees on " + a->name + " x " + b->name;
    seen.insert({a->name, b->name});
    seen.insert({b->name, a->name});
  }
  for (const auto& need : required)
    if (!seen.count(need))
      return "required pair " + need.first + " x " + need.second +
             " was not covered";
  return std::nullopt;
}

// --- criterion 5 ------------------------------------------------------------

Failure named_verdicts() {
  const PermGroup i2 = PermGroup::identity(2);
  const PermGroup c3 = cyclic(3);
  const PermGroup s2 = generate({Permutation::parse_cycles("(0 1)", 2)});
  const PermGroup s2_on_3 = generate({Permutation::parse_cycles("(0 1)", 3)});

  const struct {
    const char* label;
    const PermGroup& a;
    const PermGroup& b;
    bool expected_in_gr;
  } cases[] = {
      {"I2 x I2", i2, i2, true},         {"C3 x I2", c3, i2, true},
      {"C3 x S2", c3, s2, false},        {"C3 x C3", c3, c3, false},
      {"C3 x <(0 1)> on 3", c3, s2_on_3, true},
  };
  for (const auto& c : cases) {
    const bool predicted = classify_product_gr(c.a, c.b).product_in_gr;
    if (predicted != c.expected_in_gr)
      return std::string(c.label) + ": classifier said " +
             (predicted ? "in" : "out");
    const PermGroup product = direct_product(c.a, c.b);
    const bool brute = brute_star_closure(product).same_group_as(product);
    if (brute != c.expected_in_gr)
      return std::string(c.label) + ": brute-force closure disagrees";
  }
  return std::nullopt;
}

// --- criterion 6 ------------------------------------------------------------

Failure regular_groups_corollary() {
  for (const char* spec :
       {"cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(5)", "cyclic(6)",
        "cyclic(7)", "cyclic(8)", "s2_power(2)", "regular_abelian(2,4)",
        "s2_power(3)", "generalized_dicyclic(4)", "generalized_dicyclic(2,2)"}) {
    const CatalogEntry entry = make(spec);
    if (!entry.regular || entry.group.degree() > 8)
      return std::string(spec) + " is not a regular group of degree <= 8";
    const bool expected_outside =
        (entry.abelian && entry.exponent_gt_two) || entry.generalized_dicyclic;
    if (in_gr(entry.group) != !expected_outside)
      return std::string(spec) + " contradicts the regular-group rule";
  }
  return std::nullopt;
}

// --- criterion 7 ------------------------------------------------------------

Failure order21_group_witnesses() {
  const PermGroup g = make("example7").group;
  const auto witness = has_pairing_element(g);
  if (!witness)
    return "no pairing element found";
  if (!pairs_all_paired_orbitals(*witness, compute_orbitals(g)))
    return "returned witness does not swap the paired orbitals";

  const ClassificationReport report = classify_product_gr(g, g);
  if (report.product_in_gr || !report.product_in_dgr)
    return "self-product verdict wrong";
  if (report.case_fired != ProductCase::condition_iii)
    return "self-product fired the wrong branch";
  const nlohmann::ordered_json j = report.to_json();
  if (!j["witnesses"]["a_pairing_element"].is_string() ||
      !j["witnesses"]["b_pairing_element"].is_string())
    return "witnesses were not serialized";
  return std::nullopt;
}

// --- criterion 8 ------------------------------------------------------------

template <typename Graph>
Graph random_colored(std::mt19937& rng, bool symmetric) {
  std::uniform_int_distribution<unsigned> size_dist(2, 7);
  std::uniform_int_distribution<unsigned> color_count_dist(1, 4);
  const unsigned n = size_dist(rng);
  const unsigned k = color_count_dist(rng);
  std::uniform_int_distribution<unsigned> color_dist(0, k - 1);

  std::vector<unsigned> colors(std::size_t(n) * n, 0);
  for (Point v = 0; v < n; ++v)
    for (Point w = symmetric ? v + 1 : 0; w < n; ++w) {
      if (v == w)
        continue;
      const unsigned c = color_dist(rng);
      colors[std::size_t(v) * n + w] = c;
      if (symmetric)
        colors[std::size_t(w) * n + v] = c;
    }
  std::vector<unsigned> remap(k, ~0u);
  unsigned used = 0;
  for (Point v = 0; v < n; ++v)
    for (Point w = 0; w < n; ++w) {
      if (v == w)
        continue;
      unsigned& c = colors[std::size_t(v) * n + w];
      if (remap[c] == ~0u)
        remap[c] = used++;
      c = remap[c];
    }
  return Graph(n, used, std::move(colors));
}

Failure solver_matches_brute_force() {
  std::mt19937 rng(20260815);
  for (int i = 0; i < 100; ++i) {
    const ColoredGraph g = random_colored<ColoredGraph>(rng, true);
    if (!automorphism_group(g).same_group_as(brute_force_automorphisms(g)))
      return "graph instance " + std::to_string(i) + " disagrees";
  }
  for (int i = 0; i < 100; ++i) {
    const ColoredDigraph g = random_colored<ColoredDigraph>(rng, false);
    if (!automorphism_group(g).same_group_as(brute_force_automorphisms(g)))
      return "digraph instance " + std::to_string(i) + " disagrees";
  }
  return std::nullopt;
}

} // namespace

int main() {
  const std::vector<CatalogEntry> catalog = default_catalog();

  const struct {
    int id;
    const char* label;
    double seconds_limit;
    std::function<Failure()> body;
  } criteria[] = {
      {1, "graph closures: containment, idempotence, n! filter equality",
       10.0, graph_closure_suite},
      {2, "digraph membership = absence of outside orbital preservers",
       30.0, digraph_membership_is_orbital_preservation},
      {3, "factor-wise digraph verdict matches product closures", 300.0,
       [&] { return digraph_verdicts_match_oracle(catalog); }},
      {4, "product decision tree matches product closures", 300.0,
       [&] { return graph_verdicts_match_oracle(catalog); }},
      {5, "named product verdicts match the n! filter", 5.0, named_verdicts},
      {6, "regular groups: outside the graph class iff abelian of exponent "
          "> 2 or generalized dicyclic",
       60.0, regular_groups_corollary},
      {7, "degree-7 order-21 group: pairing witness and self-product", 5.0,
       order21_group_witnesses},
      {8, "refinement solver equals brute force on 200 random colorings",
       60.0, solver_matches_brute_force},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = criterion.body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!failure && elapsed > criterion.seconds_limit)
      failure = "exceeded the " + std::to_string(criterion.seconds_limit) +
                "s budget";
    if (failure) {
      ++failures;
      std::printf("FAIL  %d: %s (%.2fs) -- %s\n", criterion.id,
                  criterion.label, elapsed, failure->c_str());
    } else {
      std::printf("PASS  %d: %s (%.2fs)\n", criterion.id, criterion.label,
                  elapsed);
    }
  }
  return failures;
}
