#pragma once

namespace lhg {
inline constexpr const char kVersion[] = "0.1.0";
}
