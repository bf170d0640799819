#ifndef CUBICLOCAL_CERTIFY_HPP
#define CUBICLOCAL_CERTIFY_HPP

#include <cstdint>
#include <string>

#include "cubiclocal/rat.hpp"
#include "cubiclocal/zeta.hpp"

namespace cubiclocal {
namespace euler {

// Rigorous truncation certificate for rho^ELS_n ~ prod_{p <= A} rho_n(p):
// B bounds the zeta tail zeta_{>A}(delta_n) from above, and
// |rho^ELS_n - prod_{p <= A} rho_n(p)| <= 1 - B^{-1/gamma_n} <= error_bound.
// All inequalities hold with outward rounding; A is the largest included prime.
struct TruncationCertificate {
    int n;
    uint64_t A;
    TailBoundParams params;
    Rat B;            // exact rational upper bound on the zeta tail
    Rat error_bound;  // exact rational upper bound on the truncation error
    long digits;      // largest D with error_bound <= 10^-D
};

struct CertifiedValue {
    Rat value;            // exact prod_{p <= A} rho_n(p)
    std::string decimal;  // correctly rounded to `digits` decimal places
    TruncationCertificate certificate;
};

// Exact check that gamma_n p^delta_n (1 - rho_n(p)) <= 1 for every prime
// p <= prime_limit, together with the degree/leading-coefficient consistency
// of the reduced fraction. On failure reports the first offending prime.
bool verify_asymptote_inequality(int n, uint64_t prime_limit = 10000,
                                 uint64_t* witness = nullptr);

// An exact rational upper bound on 1 - B^{-1/gamma}, computed with directed
// rounding at increasing precision until the rounding slack is below 1%.
Rat error_bound_upper(const Rat& B, long gamma);

// (B, error_bound) for the truncation at cutoff A with the given parameters.
std::pair<Rat, Rat> truncation_error_bound(int n, const Rat& A,
                                           const TailBoundParams& params = {});

// Smallest prime cutoff A <= A_max whose certificate reaches 10^-D; throws
// (reporting the best achievable D) if none does.
TruncationCertificate plan_truncation(int n, long D, uint64_t A_max,
                                      const TailBoundParams& params = {});

// Exact truncated Euler product prod_{p <= A} rho_n(p).
Rat truncated_product(int n, uint64_t A);

// Certified value of rho^ELS_n (n in 2..8) to D digits.
CertifiedValue rho_global(int n, long D, uint64_t A_max = 20000,
                          const TailBoundParams& params = {});

}  // namespace euler
}  // namespace cubiclocal

#endif
