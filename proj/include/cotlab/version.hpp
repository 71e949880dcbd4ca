#pragma once

namespace cotlab {
inline constexpr const char* kVersion = "0.1.0";
}
