#pragma once

#include "mod3/algebra.hpp"

namespace mod3 {

// One circle factor: a single integral degree-1 generator "a" with vanishing
// beta and P1 images.
SpacePresentation circle(int degree_cap = 12);

// One BZ/3 factor: x (degree 1), y = beta(x) (degree 2, with P1(y) = y^3).
SpacePresentation bz3(int degree_cap = 12);

// Kuenneth product over F3: disjoint union of the generator lists with
// re-indexed ids and images; display names are kept as-is.
SpacePresentation product(const SpacePresentation& A, const SpacePresentation& B, int degree_cap);

// `circles` circle factors named a1..aK followed by `bz3_factors` BZ/3
// factors named (x1, y1), (x2, y2), ...
SpacePresentation product_space(int circles, int bz3_factors, int degree_cap);

// Classifying-space presentation of (Z/3)^2 x Z^(n-2): n-2 circles and two
// BZ/3 factors. degree_cap <= 0 selects the default n+6.
SpacePresentation b_gamma(int n, int degree_cap = 0);

}  // namespace mod3
