#pragma once

namespace qrv {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "qrvlab";

}  // namespace qrv
