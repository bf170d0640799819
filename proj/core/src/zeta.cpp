#include "cubiclocal/zeta.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "cubiclocal/bernoulli.hpp"
#include "cubiclocal/primes.hpp"

namespace cubiclocal {
namespace euler {

namespace {

void check_params(long s, const TailBoundParams& params) {
    if (s < 2) throw std::invalid_argument("zeta bound needs integer s >= 2");
    if (params.M < 1) throw std::invalid_argument("M must be >= 1");
    if (params.I < 2 || params.I % 2 != 0) throw std::invalid_argument("I must be even and >= 2");
}

// s (s+1) ... (s+k-1), the rising factorial with k factors.
Int rising(long s, long k) {
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= s + i;
    return r;
}

Int factorial(long k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rat zeta_upper_impl(long s, const TailBoundParams& params) {
    const Int M(params.M);
    const unsigned long us = static_cast<unsigned long>(s);

    // Partial sum over a common denominator lcm(1..M)^s.
    Int lcm = 1;
    for (long m = 2; m <= params.M; ++m) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), m);
    Int lcm_s = pow_int(lcm, us);
    Int acc = 0;
    for (long m = 1; m <= params.M; ++m) {
        acc += pow_int(lcm / m, us);
    }
    Rat sum = make_rat(acc, lcm_s);

    // Integral and boundary terms: 1/((s-1) M^{s-1}) - 1/(2 M^s).
    sum += make_rat(Int(1), Int(s - 1) * pow_int(M, us - 1));
    sum -= make_rat(Int(1), 2 * pow_int(M, us));

    // Bernoulli corrections and the absolute value of the first omitted term.
    for (int i = 1; i <= params.I; ++i) {
        Rat term = bernoulli(2 * i) * Rat(rising(s, 2 * i - 1)) /
                   Rat(factorial(2 * i) * pow_int(M, us + 2 * i - 1));
        sum += term;
    }
    Rat tail = bernoulli(2 * params.I + 2) * Rat(rising(s, 2 * params.I + 1)) /
               Rat(factorial(2 * params.I + 2) * pow_int(M, us + 2 * params.I + 1));
    sum += abs(tail);
    return sum;
}

}  // namespace

Rat zeta_upper(long s, const TailBoundParams& params) {
    check_params(s, params);
    static std::map<std::tuple<long, long, int>, Rat> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_tuple(s, params.M, params.I);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, zeta_upper_impl(s, params)).first->second;
}

Rat zeta_tail_upper(const Rat& A, long s, const TailBoundParams& params) {
    check_params(s, params);
    if (A < 1) throw std::invalid_argument("A must be >= 1");
    Rat bound = zeta_upper(s, params);
    Int floorA;
    mpz_fdiv_q(floorA.get_mpz_t(), A.get_num().get_mpz_t(), A.get_den().get_mpz_t());
    if (floorA >= 2) {
        for (uint64_t p : primes_up_to(floorA.get_ui())) {
            // bound *= 1 - p^{-s}
            Int ps = pow_int(Int(p), static_cast<unsigned long>(s));
            bound *= make_rat(ps - 1, ps);
        }
    }
    return bound;
}

}  // namespace euler
}  // namespace cubiclocal
