#pragma once

#include <cstddef>

namespace ecgr {

/// Resource bounds shared by the exact searches. Exceeding a bound raises
/// BudgetError; results are never truncated or approximated.
struct Limits {
  /// Largest vertex count accepted by the automorphism search.
  unsigned max_aut_vertices = 16;
  /// Largest element set any group is allowed to materialize.
  std::size_t max_group_elements = 1'000'000;
};

} // namespace ecgr
