#pragma once
#include <string>

namespace sqz {

// Shortest %.17g rendering: every finite double round-trips exactly.
std::string g17(double v);

}  // namespace sqz
