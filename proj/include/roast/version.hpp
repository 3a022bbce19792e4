#pragma once

#ifndef ROAST_VERSION_STRING
#define ROAST_VERSION_STRING "0.1.0"
#endif

namespace roast {
inline constexpr const char* kVersion = ROAST_VERSION_STRING;
}
