#ifndef CUBICLOCAL_RAT_HPP
#define CUBICLOCAL_RAT_HPP

#include <gmpxx.h>

#include <string>

namespace cubiclocal {

// Exact scalars. mpq_class keeps the canonical form we rely on everywhere:
// gcd(|num|, den) = 1 and den >= 1.
using Int = mpz_class;
using Rat = mpq_class;

// num/den as a canonical rational; throws std::domain_error on den == 0.
Rat make_rat(long num, long den);
Rat make_rat(const Int& num, const Int& den);

// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

// "n" for integers, "n/d" otherwise.
std::string rat_to_string(const Rat& x);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

// Largest e with 10^e <= x. Requires x > 0.
long floor_log10(const Rat& x);

// Largest D >= 0 with x <= 10^-D. Requires 0 < x < 1; capped at `cap`.
long certified_digits(const Rat& x, long cap = 1000000);

}  // namespace cubiclocal

#endif
