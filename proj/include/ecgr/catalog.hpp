#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ecgr/classify.hpp"

namespace ecgr {

/// A named test-bed group with structural tags. Tags are always computed
/// from the constructed group; constructors that promise a property verify
/// it and fail loudly on disagreement instead of trusting themselves.
struct CatalogEntry {
  std::string name;
  PermGroup group;

  bool regular = false;
  bool transitive = false;
  bool abelian = false;
  bool exponent_gt_two = false;          // some element has order > 2
  bool generalized_dicyclic = false;     // abelian index-2 subgroup inverted
                                         // by an outside element whose square
                                         // is an order-2 member
  bool all_orbitals_self_paired = false; // degree >= 2 only

  std::vector<std::string> tag_strings() const;
};

/// Computes all tags for an arbitrary group.
CatalogEntry catalog_entry(std::string name, PermGroup group);

/// Named constructors. Accepted specs:
///   identity(n)                 trivial group on n points, n >= 1
///   cyclic(n)                   n-cycle acting on n points, n >= 2
///   symmetric(n)                all permutations of n points, 2 <= n <= 8
///   dihedral(n)                 n-gon symmetries on n points, n >= 3
///   s2_power(k)                 k-fold product of symmetric(2), 1 <= k <= 5
///   regular_abelian(d1,...,dm)  Z_d1 x ... x Z_dm translating itself
///   generalized_dicyclic(d...)  index-2 abelian base Z_d1 x ... extended by
///                               an inverting element; even base order
///   example7                    degree-7 group of order 21 generated by
///                               (0 1 2 3 4 5 6) and (1 2 4)(3 6 5)
///   field_subgroup(p,n,k)       translations of the p^n-element field plus
///                               multiplication by g^(2k) for a fixed
///                               multiplicative generator g; k divides n
/// Anything else (or out-of-range parameters) raises ParseError.
CatalogEntry make(const std::string& spec);

/// The built-in census catalog: small identity, symmetric, cyclic, dihedral
/// and product groups, the degree-7 order-21 group, and a few groups kept by
/// explicit generators (a padded transposition group and the sharply
/// 2-transitive affine group on 5 points).
std::vector<CatalogEntry> default_catalog();

/// One census line per catalog entry: where the group sits, its tags, and
/// (when the pairing-element scan applies) the found witness or its proven
/// absence. Entries whose closure blows a budget record the reason instead.
struct CensusEntryRow {
  std::string name;
  unsigned degree = 0;
  std::uint64_t order = 0;
  std::string status;                       // status label or "out-of-budget: ..."
  std::vector<std::string> tags;
  bool pairing_scanned = false;
  std::optional<std::string> pairing_element; // cycles; nullopt = none exists

  nlohmann::ordered_json to_json() const;
};

/// One census line per unordered catalog pair (including self-pairs). Pairs
/// whose product degree exceeds the budget are recorded as skipped. The
/// oracle field is "agree"/"disagree" when the explicit product closures were
/// within reach, otherwise "skipped: <reason>".
struct CensusPairRow {
  std::string a;
  std::string b;
  unsigned product_degree = 0;
  std::optional<ClassificationReport> report;
  std::string note;   // empty, or why the classification is missing
  std::string oracle;

  nlohmann::ordered_json to_json() const;
};

/// Streams the census rows in a fixed order: all entry rows (catalog order),
/// then all pair rows (pair-index order). max_product_degree must be >= 4.
void run_census(const std::vector<CatalogEntry>& catalog,
                unsigned max_product_degree, const Limits& limits,
                const std::function<void(const CensusEntryRow&)>& on_entry,
                const std::function<void(const CensusPairRow&)>& on_pair);

} // namespace ecgr
