#include "cubiclocal/padic.hpp"

#include <random>
#include <stdexcept>

#include "cubiclocal/primes.hpp"

namespace cubiclocal {
namespace ff {

namespace {

using Cubic = std::array<Int, 4>;  // ascending: c0 + c1 x + c2 x^2 + c3 x^3

Int eval(const Cubic& f, unsigned long x) {
    return ((f[3] * x + f[2]) * x + f[1]) * x + f[0];
}

Int eval_derivative(const Cubic& f, unsigned long x) {
    return (3 * f[3] * x + 2 * f[2]) * x + f[1];
}

bool all_zero(const Cubic& f) { return f[0] == 0 && f[1] == 0 && f[2] == 0 && f[3] == 0; }

// Substitute x -> r + p*x and divide out the p-content; reports the valuation
// consumed. The caller guarantees f(r) == 0 and f'(r) == 0 mod p, so the
// content valuation is at least 1.
Cubic shift_scale(const Cubic& f, unsigned long r, uint32_t p, long& consumed) {
    // Taylor coefficients: g_k = f^{(k)}(r)/k! * p^k.
    Cubic g;
    g[0] = eval(f, r);
    g[1] = eval_derivative(f, r) * p;
    g[2] = (3 * f[3] * r + f[2]) * p * p;
    g[3] = f[3] * p * p * p;
    long v = 0;
    while (true) {
        bool divisible = true;
        for (const auto& c : g)
            if (!mpz_divisible_ui_p(c.get_mpz_t(), p)) divisible = false;
        if (!divisible) break;
        bool nonzero = false;
        for (auto& c : g) {
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
            if (c != 0) nonzero = true;
        }
        ++v;
        if (!nonzero) break;
    }
    consumed = v > 0 ? v : 1;
    return g;
}

// Does f have a root in Z_p? `budget` is the remaining valuation allowance.
Solubility zp_root(const Cubic& f, uint32_t p, long budget, bool restrict_to_pzp) {
    if (all_zero(f)) return Solubility::soluble;
    bool any_undecided = false;
    for (unsigned long r = 0; r < (restrict_to_pzp ? 1ul : p); ++r) {
        Int fr = eval(f, r);
        if (fr == 0) return Solubility::soluble;  // exact integer root
        if (!mpz_divisible_ui_p(fr.get_mpz_t(), p)) continue;
        if (!mpz_divisible_ui_p(eval_derivative(f, r).get_mpz_t(), p))
            return Solubility::soluble;  // simple root mod p lifts
        if (budget <= 0) {
            any_undecided = true;
            continue;
        }
        long consumed = 0;
        Cubic g = shift_scale(f, r, p, consumed);
        Solubility sub = zp_root(g, p, budget - consumed, false);
        if (sub == Solubility::soluble) return Solubility::soluble;
        if (sub == Solubility::undecided) any_undecided = true;
    }
    return any_undecided ? Solubility::undecided : Solubility::insoluble;
}

}  // namespace

Solubility binary_cubic_solubility(const std::array<Int, 4>& coeffs, uint32_t p, int precision) {
    // coeffs = (a, b, c, d) of a x0^3 + b x0^2 x1 + c x0 x1^2 + d x1^3.
    const auto& [a, b, c, d] = coeffs;
    // Chart x1 = 1: roots of a x^3 + b x^2 + c x + d in Z_p.
    Cubic f1{d, c, b, a};
    Solubility s1 = zp_root(f1, p, precision, false);
    if (s1 == Solubility::soluble) return Solubility::soluble;
    // Remaining points [1 : y] with y in pZ_p: roots of d y^3 + c y^2 + b y + a there.
    Cubic f2{a, b, c, d};
    Solubility s2 = zp_root(f2, p, precision, true);
    if (s2 == Solubility::soluble) return Solubility::soluble;
    if (s1 == Solubility::undecided || s2 == Solubility::undecided) return Solubility::undecided;
    return Solubility::insoluble;
}

SolubilityEstimate padic_binary_cubic_sample(uint32_t p, uint64_t samples, int precision,
                                             uint64_t seed) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (precision < 10) throw std::invalid_argument("precision must be at least 10");

    std::mt19937_64 rng(seed);
    // Bias-free digit draws: reject the top sliver of the 64-bit range.
    const uint64_t bound = (~0ull / p) * p;
    auto draw_digit = [&]() {
        uint64_t v;
        do {
            v = rng();
        } while (v >= bound);
        return static_cast<unsigned long>(v % p);
    };

    SolubilityEstimate est{p, precision, seed, samples, 0, 0, 0};
    for (uint64_t s = 0; s < samples; ++s) {
        std::array<Int, 4> coeffs;
        for (auto& c : coeffs) {
            Int v = 0;
            for (int k = 0; k < precision; ++k) {
                v *= p;
                v += draw_digit();
            }
            c = v;
        }
        switch (binary_cubic_solubility(coeffs, p, precision)) {
            case Solubility::soluble: ++est.soluble; break;
            case Solubility::insoluble: ++est.insoluble; break;
            case Solubility::undecided: ++est.undecided; break;
        }
    }
    return est;
}

}  // namespace ff
}  // namespace cubiclocal
