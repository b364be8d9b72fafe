#include "ecgr/classify.hpp"

#include <utility>

namespace ecgr {

namespace {

nlohmann::ordered_json witness_json(const std::optional<std::optional<Permutation>>& w) {
  if (!w)
    return nullptr; // never scanned; caller omits the field
  if (!*w)
    return nullptr; // scanned, proven absent
  return (*w)->cycles();
}

std::optional<Permutation> scan_pairing(const PermGroup& a,
                                        const OrbitalStructure& s,
                                        const Limits& limits) {
  for (const Permutation& p : star_closure(a, limits).extra)
    if (pairs_all_paired_orbitals(p, s))
      return p;
  return std::nullopt;
}

} // namespace

std::string_view to_string(GroupStatus s) {
  switch (s) {
    case GroupStatus::not_dgr: return "not-DGR";
    case GroupStatus::dgr_not_gr: return "DGR-not-GR";
    case GroupStatus::gr: return "GR";
    case GroupStatus::i2: return "I2";
  }
  throw Error("unknown group status");
}

std::string_view to_string(ProductCase c) {
  switch (c) {
    case ProductCase::both_gr: return "both-GR";
    case ProductCase::product_with_i2: return "product-with-I2";
    case ProductCase::condition_i: return "condition-i";
    case ProductCase::condition_ii: return "condition-ii";
    case ProductCase::condition_iii: return "condition-iii";
    case ProductCase::non_self_paired_rescue: return "non-self-paired-rescue";
    case ProductCase::paired_orbit_blocked: return "paired-orbit-blocked";
  }
  throw Error("unknown product case");
}

nlohmann::ordered_json ClassificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["a_status"] = to_string(a_status);
  j["b_status"] = to_string(b_status);
  j["product_in_dgr"] = product_in_dgr;
  j["product_in_gr"] = product_in_gr;
  j["case"] = to_string(case_fired);
  j["swapped"] = swapped;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  if (pairing_a)
    witnesses["a_pairing_element"] = witness_json(pairing_a);
  if (pairing_b)
    witnesses["b_pairing_element"] = witness_json(pairing_b);
  if (non_self_paired_orbital) {
    witnesses["non_self_paired_orbital"] = *non_self_paired_orbital;
    witnesses["non_self_paired_side"] = swapped ? "a" : "b";
  }
  if (!witnesses.empty())
    j["witnesses"] = std::move(witnesses);
  return j;
}

GroupStatus group_status(const PermGroup& g, const Limits& limits) {
  if (g.degree() < 2)
    throw Error("group status requires degree >= 2");
  if (g.degree() == 2 && g.order() == 1)
    return GroupStatus::i2;
  if (!in_dgr(g, limits))
    return GroupStatus::not_dgr;
  return in_gr(g, limits) ? GroupStatus::gr : GroupStatus::dgr_not_gr;
}

bool classify_product_dgr(const PermGroup& a, const PermGroup& b,
                          const Limits& limits) {
  if (a.degree() == 1)
    return in_dgr(b, limits);
  if (b.degree() == 1)
    return in_dgr(a, limits);
  return in_dgr(a, limits) && in_dgr(b, limits);
}

ClassificationReport classify_product_gr(const PermGroup& a, const PermGroup& b,
                                         const Limits& limits) {
  if (a.degree() == 1 || b.degree() == 1)
    throw Error("product classification requires both factors on >= 2 points");

  ClassificationReport r;
  r.a_status = group_status(a, limits);
  r.b_status = group_status(b, limits);
  r.product_in_dgr =
      r.a_status != GroupStatus::not_dgr && r.b_status != GroupStatus::not_dgr;

  // 1. A factor outside the digraph class sinks the product.
  if (!r.product_in_dgr) {
    r.product_in_gr = false;
    r.case_fired = ProductCase::condition_i;
    return r;
  }
  // 2. Two graph-class factors multiply to a graph-class product.
  if (r.a_status == GroupStatus::gr && r.b_status == GroupStatus::gr) {
    r.product_in_gr = true;
    r.case_fired = ProductCase::both_gr;
    return r;
  }
  // 3. The two-point identity group pads any digraph-class partner into the
  // graph class.
  if (r.a_status == GroupStatus::i2 || r.b_status == GroupStatus::i2) {
    r.product_in_gr = true;
    r.case_fired = ProductCase::product_with_i2;
    return r;
  }
  // 4. Exactly one graph-class factor: the product stays in the graph class
  // iff that factor has a non-self-paired orbital.
  if (r.a_status == GroupStatus::gr || r.b_status == GroupStatus::gr) {
    r.swapped = r.a_status == GroupStatus::gr;
    const PermGroup& graph_side = r.swapped ? a : b;
    auto orbital = compute_orbitals(graph_side).first_non_self_paired();
    if (orbital) {
      r.product_in_gr = true;
      r.case_fired = ProductCase::non_self_paired_rescue;
      r.non_self_paired_orbital = orbital;
    } else {
      r.product_in_gr = false;
      r.case_fired = ProductCase::condition_ii;
    }
    return r;
  }
  // 5. Both factors are digraph-only: the product leaves the graph class iff
  // each factor's closure complement holds an element swapping all its
  // paired orbitals.
  r.pairing_a = scan_pairing(a, compute_orbitals(a), limits);
  r.pairing_b = scan_pairing(b, compute_orbitals(b), limits);
  if (*r.pairing_a && *r.pairing_b) {
    // The obstruction only arises for transitive factors; an intransitive
    // group has a non-self-paired orbital across two of its orbits, which no
    // single closure element can swap alongside every other paired orbital
    // while the product still avoids the graph class.
    if (!a.is_transitive() || !b.is_transitive())
      throw Error("internal inconsistency: paired-orbital obstruction fired "
                  "for an intransitive factor");
    r.product_in_gr = false;
    r.case_fired = ProductCase::condition_iii;
  } else {
    r.product_in_gr = true;
    r.case_fired = ProductCase::paired_orbit_blocked;
  }
  return r;
}

bool cross_check(const PermGroup& a, const PermGroup& b, const Limits& limits) {
  const ClassificationReport report = classify_product_gr(a, b, limits);
  const bool dgr_verdict = classify_product_dgr(a, b, limits);
  const PermGroup product = direct_product(a, b);
  return report.product_in_gr == in_gr(product, limits) &&
         dgr_verdict == in_dgr(product, limits);
}

std::optional<Permutation> has_pairing_element(const PermGroup& a,
                                               const Limits& limits) {
  if (a.degree() < 2)
    throw Error("pairing-element scan requires degree >= 2");
  const GroupStatus status = group_status(a, limits);
  if (status != GroupStatus::dgr_not_gr)
    throw Error(
        "pairing-element scan applies only to digraph-class groups outside "
        "the graph class (and not the two-point identity group); got status " +
        std::string(to_string(status)));
  return scan_pairing(a, compute_orbitals(a), limits);
}

} // namespace ecgr
