#pragma once

namespace altfix {

inline constexpr const char* kArtifactName = "altfix";
inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace altfix
