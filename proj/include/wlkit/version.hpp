#pragma once

namespace wlkit {
inline constexpr const char* kVersion = "0.1.0";
}
