#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace braidcoh {

// Exact rationals. gmpxx keeps results canonical (positive denominator, lowest terms).
using Scalar = mpq_class;

// Accepts "3", "-7", "1/2", "-3/4" with optional surrounding whitespace.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

inline Scalar sign_of(long exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace braidcoh
