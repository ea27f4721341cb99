#pragma once

namespace mosaic {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace mosaic
