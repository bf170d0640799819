#ifndef CUBICLOCAL_ZETA_HPP
#define CUBICLOCAL_ZETA_HPP

#include "cubiclocal/rat.hpp"

namespace cubiclocal {
namespace euler {

// Euler-Maclaurin tuning: partial-sum length M and correction order I.
struct TailBoundParams {
    long M = 1000;
    int I = 4;  // even, >= 2
};

// Exact rational upper bound on zeta_{>A}(s) = prod_{p > A} (1 - p^{-s})^{-1},
// via the Euler-Maclaurin estimate of zeta(s) (partial sum to M, integral and
// boundary terms, I Bernoulli corrections, plus the absolute first omitted
// term) times the exact finite product over primes p <= A. Requires integer
// s >= 2, A >= 1.
Rat zeta_tail_upper(const Rat& A, long s, const TailBoundParams& params = {});

// The Euler-Maclaurin zeta(s) upper bound alone (no prime product).
Rat zeta_upper(long s, const TailBoundParams& params = {});

}  // namespace euler
}  // namespace cubiclocal

#endif
