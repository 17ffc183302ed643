#pragma once

namespace shatter {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace shatter
