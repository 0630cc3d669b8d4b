#pragma once

namespace zenobath {

inline constexpr const char* kVersion = "0.1.0";

} // namespace zenobath
