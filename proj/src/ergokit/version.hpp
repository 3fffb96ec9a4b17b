#pragma once

namespace ergokit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ergokit
