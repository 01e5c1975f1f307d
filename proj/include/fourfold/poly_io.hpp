#pragma once
#include <string>

#include "fourfold/poly.hpp"

namespace fourfold {

// Text grammar: sum of terms, each an optional signed coefficient (integer or
// a/b) followed by optional variable factors x0..x5 with optional ^k powers.
// '*' between factors is optional, whitespace ignored.
QPoly parse_poly(const std::string& text, int nvars);
std::string poly_str(const QPoly& f);
std::string f2poly_str(const F2Poly& f);
std::string mono_str(const Mono& m);

}  // namespace fourfold
