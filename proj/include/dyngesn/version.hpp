#pragma once

namespace dyngesn {

inline constexpr const char* kVersion = "0.1.0";

// Build identifier written as a comment line at the top of every emitted CSV.
inline constexpr const char* kBuildIdent = "dyngesn 0.1.0";

}  // namespace dyngesn
