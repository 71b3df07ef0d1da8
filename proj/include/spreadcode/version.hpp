#pragma once

namespace spreadcode {

inline constexpr const char* tool_version = "1.0.0";

}
