#ifndef CUBICLOCAL_POLYZ_HPP
#define CUBICLOCAL_POLYZ_HPP

#include <vector>

#include "cubiclocal/rat.hpp"

namespace cubiclocal {

// Dense integer polynomial, ascending degree; empty vector is the zero
// polynomial, otherwise the last entry is nonzero. This is the workhorse
// representation behind RatFunc; the rational-coefficient PolyQ converts
// to and from it.
using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& a);
long zp_deg(const ZPoly& a);  // -1 for the zero polynomial
bool zp_is_zero(const ZPoly& a);
const Int& zp_lc(const ZPoly& a);  // leading coefficient; requires a != 0

ZPoly zp_const(const Int& c);
ZPoly zp_tpow(unsigned long e);              // t^e
ZPoly zp_tpow_minus_one(unsigned long e);    // t^e - 1
ZPoly zp_tpow_plus_one(unsigned long e);     // t^e + 1

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(ZPoly a);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul_int(ZPoly a, const Int& c);
ZPoly zp_pow(const ZPoly& a, unsigned long e);

// Trailing zero coefficients, i.e. the t-adic valuation. Requires a != 0.
long zp_valuation(const ZPoly& a);
bool zp_is_monomial(const ZPoly& a);

Int zp_content(const ZPoly& a);           // >= 0; gcd of coefficients
ZPoly zp_primitive_part(const ZPoly& a);  // a / content(a); keeps sign of lc

Int zp_eval(const ZPoly& a, const Int& x);
Rat zp_eval(const ZPoly& a, const Rat& x);

// Quotient of an exact division, or false if b does not divide a in Z[t].
bool zp_divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

// Full gcd in Z[t] (contents included), leading coefficient > 0; gcd(0,0)=0.
// Computed from modular images with trial-division verification.
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);

// Reference gcd for tests: monic Euclidean algorithm over Q[t] on the
// primitive parts, re-normalized to primitive integer form. Quadratic
// coefficient growth makes it unusable at high degree; kept as an
// independent check on zp_gcd.
ZPoly zp_gcd_euclid_reference(const ZPoly& a, const ZPoly& b);

}  // namespace cubiclocal

#endif
