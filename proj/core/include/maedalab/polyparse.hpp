#pragma once

#include <string_view>

#include "maedalab/ffpoly.hpp"

namespace maedalab {

/// Accepts "c0,c1,...,cn" or a polynomial in x with integer coefficients
/// such as "x^5-x-1" or "3*x^2 + 2x - 7". Throws kParse otherwise.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace maedalab
