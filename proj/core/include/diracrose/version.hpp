#pragma once

#include <string_view>

namespace diracrose {

std::string_view version();

// Library version plus the source revision it was configured from.
std::string_view provenance();

}  // namespace diracrose
