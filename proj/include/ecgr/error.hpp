#pragma once

#include <stdexcept>

namespace ecgr {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: cycle notation, group specs, CLI arguments.
struct ParseError : Error {
  using Error::Error;
};

/// A configured resource bound was exceeded (element cap, vertex limit,
/// product-degree limit). The computation was abandoned, never approximated.
struct BudgetError : Error {
  using Error::Error;
};

} // namespace ecgr
