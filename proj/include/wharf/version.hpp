#pragma once

namespace wharf {

/// Library / tool version reported in machine-readable outputs.
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace wharf
