#pragma once

#include <string>

#include "tempsub/extreal.hpp"

namespace tempsub {

/// Shortest decimal representation that parses back to the same double.
[[nodiscard]] std::string format_double(double v);

/// Extended reals render as "inf" / "-inf".
[[nodiscard]] std::string format_ext(ExtReal v);

}  // namespace tempsub
