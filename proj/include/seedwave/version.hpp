#pragma once

namespace seedwave {

inline constexpr const char* version = "0.1.0";

}  // namespace seedwave
