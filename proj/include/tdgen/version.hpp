#pragma once

namespace tdgen {

inline constexpr const char* kGeneratorVersion = "1.0.0";

}  // namespace tdgen
