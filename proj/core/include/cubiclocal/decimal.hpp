#ifndef CUBICLOCAL_DECIMAL_HPP
#define CUBICLOCAL_DECIMAL_HPP

#include <string>

#include "cubiclocal/rat.hpp"

namespace cubiclocal {

// Exact decimal rendering of rationals. All rounding decisions are made by
// integer arithmetic on the exact value; nothing here touches floating point.

// Fixed-point, `digits` places after the point, round to nearest (ties to even).
std::string decimal_string(const Rat& x, long digits);

// Scientific form with k significant digits, e.g. (x=1/300, k=3) -> "3.33e-3".
// Round to nearest, ties to even. Requires x != 0.
std::string scientific_string(const Rat& x, int k);

// Mantissa digits and decimal exponent of x rounded to k significant digits:
// x ~ 0.mantissa * 10^(exp10+1) with mantissa of length k. Requires x > 0.
struct SigDigits {
    std::string mantissa;  // k digits, no separator
    long exp10;            // floor(log10(rounded x))
};
SigDigits sig_digits(const Rat& x, int k);

// Smallest decimal of the form m*10^e (2 significant digits) that is >= x;
// used to print certified upper bounds without understating them.
std::string decimal_upper_bound_string(const Rat& x);

}  // namespace cubiclocal

#endif
