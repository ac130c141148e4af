#pragma once

namespace oscdirac {

inline constexpr const char* kVersion = "0.1.0";

}
