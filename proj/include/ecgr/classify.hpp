#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "ecgr/closure.hpp"

namespace ecgr {

/// Where a single group sits: outside the digraph class, in the digraph class
/// but not the graph class, in the graph class, or the two-point identity
/// group (which is in the digraph class only, and gets its own label because
/// products with it behave specially).
enum class GroupStatus { not_dgr, dgr_not_gr, gr, i2 };

/// Which branch of the product decision tree produced the verdict.
enum class ProductCase {
  both_gr,                // both factors realizable as graph groups
  product_with_i2,        // one factor is the two-point identity group
  condition_i,            // some factor is not even a digraph group
  condition_ii,           // graph factor has only self-paired orbitals
  condition_iii,          // both factors carry orbital-pairing witnesses
  non_self_paired_rescue, // graph factor has a non-self-paired orbital
  paired_orbit_blocked,   // some factor has no orbital-pairing element
};

std::string_view to_string(GroupStatus s);
std::string_view to_string(ProductCase c);

/// Verdict for a direct product, with enough detail to audit the decision:
/// per-factor statuses, both verdicts, the branch that fired, and witnesses
/// for every existential the branch depended on.
struct ClassificationReport {
  GroupStatus a_status;
  GroupStatus b_status;
  bool product_in_dgr = false;
  bool product_in_gr = false;
  ProductCase case_fired;

  /// True when the branch description applies with the roles of a and b
  /// exchanged (the tree normalizes so the graph-class factor is "b").
  bool swapped = false;

  /// Set when the pairing-element scan ran for the factor; the inner optional
  /// is empty when the scan proved no such element exists.
  std::optional<std::optional<Permutation>> pairing_a;
  std::optional<std::optional<Permutation>> pairing_b;

  /// Index of a non-self-paired orbital of the graph-class factor, when that
  /// existential decided the branch.
  std::optional<unsigned> non_self_paired_orbital;

  nlohmann::ordered_json to_json() const;
};

/// Status of a single group (degree >= 2); decides the two closure
/// memberships.
GroupStatus group_status(const PermGroup& g, const Limits& limits = {});

/// Digraph-class membership of the product, decided factor-wise: the product
/// is a digraph group iff both factors are. A degree-1 factor short-circuits
/// to the other factor.
bool classify_product_dgr(const PermGroup& a, const PermGroup& b,
                          const Limits& limits = {});

/// Graph-class membership of the product, decided by the orbital-based
/// decision tree; never builds the product's graph. Degree-1 factors are
/// rejected.
ClassificationReport classify_product_gr(const PermGroup& a, const PermGroup& b,
                                         const Limits& limits = {});

/// Recomputes both verdicts on the explicit product via its closures and
/// compares with the factor-wise classification. True iff both agree.
bool cross_check(const PermGroup& a, const PermGroup& b,
                 const Limits& limits = {});

/// First element (in image-table order) of the closure-minus-group set that
/// swaps every pair of distinct paired orbitals of a, or nullopt when none
/// does. Requires a to be a digraph group that is neither a graph group nor
/// the two-point identity group.
std::optional<Permutation> has_pairing_element(const PermGroup& a,
                                               const Limits& limits = {});

} // namespace ecgr
