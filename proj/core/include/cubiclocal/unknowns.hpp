#ifndef CUBICLOCAL_UNKNOWNS_HPP
#define CUBICLOCAL_UNKNOWNS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cubiclocal {
namespace density {

// One of the 64 lifting probabilities per n. Index meanings:
//   rho                      -- no indices
//   rho_cond                 -- a = condition j
//   sigma                    -- a = type i
//   sigma_prime              -- a = type i
//   sigma_cond               -- a = type i, b = condition k
//   tau, tau_prime           -- a = i, b = j
//   theta                    -- a = i, b = j, c = k
enum class Kind : uint8_t { rho, rho_cond, sigma, sigma_prime, sigma_cond, tau, tau_prime, theta };

struct UnknownId {
    Kind kind;
    uint8_t a = 0, b = 0, c = 0;

    auto operator<=>(const UnknownId&) const = default;
    std::string name() const;
};

UnknownId rho();
UnknownId rho_cond(int j);
UnknownId sigma(int i);
UnknownId sigma_prime(int i);
UnknownId sigma_cond(int i, int k);
UnknownId tau(int i, int j);
UnknownId tau_prime(int i, int j);
UnknownId theta(int i, int j, int k);

// All 64 ids in canonical order (also the deterministic tie-break order).
const std::vector<UnknownId>& all_unknowns();

}  // namespace density
}  // namespace cubiclocal

#endif
