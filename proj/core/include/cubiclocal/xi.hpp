#ifndef CUBICLOCAL_XI_HPP
#define CUBICLOCAL_XI_HPP

#include <array>
#include <optional>

#include "cubiclocal/ratfunc.hpp"

namespace cubiclocal {
namespace density {

// Probabilities xi_{n,i} (and xi^{(j)}_{n,i} under the point/line/plane
// condition j) that a nonzero cubic form in n+1 variables over F_q has
// factorization type i, as rational functions in t = q. values[0] is defined
// as 1 minus the other three, so the table sums to one identically.
struct XiTable {
    int n;
    std::optional<int> condition;
    std::array<RatFunc, 4> values;

    RatFunc sum() const { return values[0] + values[1] + values[2] + values[3]; }
};

// Throws if n < 0, or if a condition j is given with j > n + 1.
// Base cases: xi_{0,1} = 1 and xi^{(1)}_{0,1} = 1, all other n = 0 entries 0.
const XiTable& xi_table(int n, std::optional<int> condition = {});

// binom(m, k) with the convention binom(m, k) = 0 for m < k.
unsigned long binom(long m, int k);

}  // namespace density
}  // namespace cubiclocal

#endif
