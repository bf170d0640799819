#ifndef CUBICLOCAL_PRIMES_HPP
#define CUBICLOCAL_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace cubiclocal {

// All primes p <= limit, ascending (sieve of Eratosthenes).
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

}  // namespace cubiclocal

#endif
