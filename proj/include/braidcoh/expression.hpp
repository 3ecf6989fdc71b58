#pragma once

#include <string_view>

#include "braidcoh/algebra.hpp"

namespace braidcoh {

// Parses "y*x", "x^2 - 1/2*x*y", "(x+y)^3", "3" into a normal form.
// `*` is the product, `^` a nonnegative integer power, whitespace is ignored.
AlgebraElement parse_expression(std::string_view text, const Algebra& algebra);

}  // namespace braidcoh
