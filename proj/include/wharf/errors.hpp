#pragma once

// ============================================================================
// Error taxonomy shared by the library and the command-line tool.
// ============================================================================

#include <stdexcept>

namespace wharf {

/// Malformed or unreadable input (maps to tool exit code 2).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the supported scope, e.g. fusion multiplicities
/// above one (maps to tool exit code 1).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wharf
