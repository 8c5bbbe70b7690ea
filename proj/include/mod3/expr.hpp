#pragma once

#include <string_view>

#include "mod3/algebra.hpp"

namespace mod3 {

// Parses a sum of products of integer scalars and generator names into an
// Element over P, e.g. "x1*x2 + 2*y1". Whitespace is ignored. Throws
// ParseError on malformed input or unknown identifiers.
Element parse_element(std::string_view src, const SpacePresentation& P);

}  // namespace mod3
