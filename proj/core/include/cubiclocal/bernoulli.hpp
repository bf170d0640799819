#ifndef CUBICLOCAL_BERNOULLI_HPP
#define CUBICLOCAL_BERNOULLI_HPP

#include "cubiclocal/rat.hpp"

namespace cubiclocal {
namespace euler {

// Bernoulli number B_k for even k >= 0, from the defining recurrence
// sum_{j=0}^{m} binom(m+1, j) B_j = 0; memoized. Throws on odd k.
Rat bernoulli(long k);

}  // namespace euler
}  // namespace cubiclocal

#endif
