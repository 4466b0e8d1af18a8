#pragma once

#include <string>

#include "daub/real.hpp"

namespace daub {

/// Decimal rendering with `digits` significant digits, rounded to nearest:
/// positional for 1e-4 <= |x| < 1e6, scientific otherwise. Trailing zeros
/// of the fraction are dropped, so the output is stable and diff-friendly.
std::string format_real(const Real& x, int digits);

}  // namespace daub
