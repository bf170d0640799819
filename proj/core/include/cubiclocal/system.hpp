#ifndef CUBICLOCAL_SYSTEM_HPP
#define CUBICLOCAL_SYSTEM_HPP

#include <map>
#include <set>
#include <vector>

#include "cubiclocal/ratfunc.hpp"
#include "cubiclocal/unknowns.hpp"

namespace cubiclocal {
namespace density {

// Stage of the sequential solve: theta rows close among themselves, the
// middle rows (sigma^(k), tau, tau') additionally reference theta, and the
// final rows (rho, rho^(j), sigma, sigma') additionally reference the middle.
enum class Stage { theta, middle, final };

Stage stage_of(const UnknownId& u);

// One defining relation, written as  sum coeffs[v] * v = constant,
// with coeffs[subject] = 1. Forced-zero unknowns never appear.
struct Row {
    UnknownId subject;
    std::map<UnknownId, RatFunc> coeffs;
    RatFunc constant;
};

struct LinearSystem {
    int n;
    std::vector<Row> rows;
    std::set<UnknownId> forced_zeros;
};

// Assembles the 64-unknown system of lifting-probability relations for a
// given n >= 1. Every unknown is either in forced_zeros or the subject of
// exactly one row.
LinearSystem build_system(int n);

struct ProbabilityTable {
    int n;
    std::map<UnknownId, RatFunc> solution;  // all 64 unknowns

    const RatFunc& at(const UnknownId& u) const;
};

// Exact Gaussian elimination over Q(t), one stage at a time, pivoting on the
// entry of minimal total degree. Throws std::runtime_error if a stage matrix
// is singular.
ProbabilityTable solve_staged(const LinearSystem& sys);

// sum coeffs[v] * table[v] - constant; identically zero for a valid solution.
RatFunc residual(const Row& row, const ProbabilityTable& table);

}  // namespace density
}  // namespace cubiclocal

#endif
