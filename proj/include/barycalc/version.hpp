#pragma once

namespace barycalc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace barycalc
