#ifndef CUBICLOCAL_PADIC_HPP
#define CUBICLOCAL_PADIC_HPP

#include <array>
#include <cstdint>

#include "cubiclocal/rat.hpp"

namespace cubiclocal {
namespace ff {

struct SolubilityEstimate {
    uint32_t p;
    int precision;  // valuation budget K
    uint64_t seed;
    uint64_t samples;
    uint64_t soluble;
    uint64_t insoluble;
    uint64_t undecided;
};

enum class Solubility { soluble, insoluble, undecided };

// Does a x0^3 + b x0^2 x1 + c x0 x1^2 + d x1^3 have a zero in P^1(Q_p)?
// Decided by residue branching with Hensel termination at simple roots on
// both affine charts; gives up (undecided) once a branch has consumed
// `precision` units of valuation.
Solubility binary_cubic_solubility(const std::array<Int, 4>& coeffs, uint32_t p, int precision);

// Monte Carlo estimate of the density of soluble binary cubic forms over Z_p:
// coefficients drawn uniformly from [0, p^K)^4, deterministic in `seed`.
SolubilityEstimate padic_binary_cubic_sample(uint32_t p, uint64_t samples, int precision,
                                             uint64_t seed);

}  // namespace ff
}  // namespace cubiclocal

#endif
