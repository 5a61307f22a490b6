#pragma once

namespace hhbar {

inline constexpr const char* version = "0.1.0";

}
