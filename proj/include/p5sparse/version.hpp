#pragma once

namespace p5sparse {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace p5sparse
