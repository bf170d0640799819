#ifndef CUBICLOCAL_DENSITY_HPP
#define CUBICLOCAL_DENSITY_HPP

#include <filesystem>
#include <optional>
#include <utility>

#include "cubiclocal/ratfunc.hpp"
#include "cubiclocal/system.hpp"

namespace cubiclocal {
namespace density {

// Local density rho_n(t) of soluble p-adic cubic hypersurfaces in P^n:
// solved from the staged system for 1 <= n <= 9, the constant 1 for n > 9
// (a form in ten of the variables already suffices). Throws for n <= 0.
// Results are memoized per process.
RatFunc rho_local(int n);

// Full solved table for one n (memoized alongside rho_local).
const ProbabilityTable& probability_table(int n);  // 1 <= n <= 9

// Optional on-disk cache of solved (g, h) records. Loaded records for
// n <= 8 are revalidated against the golden pair before use; anything
// stale or unreadable falls back to a fresh solve.
void set_cache_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> cache_directory();

// (gamma_n, delta_n) with 1 - rho_n(p) ~ 1/(gamma_n p^delta_n), from the
// reduced solved fraction; n in 2..8. Cross-checked against the reference
// asymptotics table; throws on any mismatch or a non-integer ratio.
std::pair<long, long> asymptotic_params(int n);

}  // namespace density
}  // namespace cubiclocal

#endif
