#pragma once

#include <string_view>

namespace dsum {

inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace dsum
