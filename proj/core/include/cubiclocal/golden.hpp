#ifndef CUBICLOCAL_GOLDEN_HPP
#define CUBICLOCAL_GOLDEN_HPP

#include "cubiclocal/poly.hpp"
#include "cubiclocal/ratfunc.hpp"

namespace cubiclocal {
namespace density {

// Reference pair (g_n, h_n) with 1 - rho_n = g_n/h_n, stored expanded from
// the factored closed forms; not necessarily in lowest terms, so comparisons
// cross-multiply.
struct GoldenRecord {
    int n;
    ZPoly g;
    ZPoly h;

    PolyQ g_poly() const { return PolyQ::from_integers(g); }
    PolyQ h_poly() const { return PolyQ::from_integers(h); }
};

// n in 1..8; cached. Construction checks h(p) != 0 on the prime check set.
const GoldenRecord& golden_record(int n);

// True iff 1 - rho equals g_n/h_n as elements of Q(t) (cross-multiplied).
bool golden_check(int n, const RatFunc& rho);

// Solves for rho_n first; n in 1..8 only.
bool golden_check(int n);

}  // namespace density
}  // namespace cubiclocal

#endif
