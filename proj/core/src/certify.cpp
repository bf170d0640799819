#include "cubiclocal/certify.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <stdexcept>

#include "cubiclocal/decimal.hpp"
#include "cubiclocal/density.hpp"
#include "cubiclocal/primes.hpp"

namespace cubiclocal {
namespace euler {

namespace {

// Exact value of an mpfr_t (never rounds).
Rat mpfr_to_rat(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rat r(mant);
    if (e >= 0) {
        mpz_class shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rat(shift);
    } else {
        mpz_class shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rat(shift);
    }
    return r;
}

struct MpfrGuard {
    mpfr_t v;
    explicit MpfrGuard(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrGuard() { mpfr_clear(v); }
    MpfrGuard(const MpfrGuard&) = delete;
    MpfrGuard& operator=(const MpfrGuard&) = delete;
};

// One directed evaluation of 1 - B^{-1/gamma}: rounds the result up or down
// depending on `upper`, via monotonicity of each step.
Rat one_minus_root(const Rat& B, long gamma, mpfr_prec_t prec, bool upper) {
    // 1 - exp(-log(B)/gamma) is increasing in B and in log B.
    mpfr_rnd_t to = upper ? MPFR_RNDU : MPFR_RNDD;
    mpfr_rnd_t away = upper ? MPFR_RNDD : MPFR_RNDU;
    MpfrGuard b(prec), l(prec), e(prec), r(prec);
    mpfr_set_q(b.v, B.get_mpq_t(), to);
    mpfr_log(l.v, b.v, to);                    // log B, directed
    mpfr_div_si(l.v, l.v, gamma, to);          // log(B)/gamma
    mpfr_neg(l.v, l.v, away);                  // -log(B)/gamma, directed the other way
    mpfr_exp(e.v, l.v, away);                  // B^{-1/gamma}
    mpfr_ui_sub(r.v, 1, e.v, to);              // 1 - B^{-1/gamma}
    return mpfr_to_rat(r.v);
}

std::pair<long, long> asymp_params(int n) {
    static std::map<int, std::pair<long, long>> memo;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    return memo.emplace(n, density::asymptotic_params(n)).first->second;
}

}  // namespace

Rat error_bound_upper(const Rat& B, long gamma) {
    if (B < 1) throw std::invalid_argument("tail bound B must be >= 1");
    if (gamma < 1) throw std::invalid_argument("gamma must be positive");
    if (B == 1) return Rat(0);
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        Rat hi = one_minus_root(B, gamma, prec, true);
        Rat lo = one_minus_root(B, gamma, prec, false);
        if (sgn(lo) > 0 && (hi - lo) * 100 < hi) return hi;
        if (prec > (1 << 22)) throw std::runtime_error("root bound failed to converge");
    }
}

bool verify_asymptote_inequality(int n, uint64_t prime_limit, uint64_t* witness) {
    auto [gamma, delta] = density::asymptotic_params(n);
    RatFunc one_minus = RatFunc(1) - density::rho_local(n);
    const ZPoly& num = one_minus.znum();
    const ZPoly& den = one_minus.zden();
    // Symbolic consistency of the reduced fraction with 1/(gamma p^delta).
    if (zp_deg(den) - zp_deg(num) != delta) return false;
    if (zp_lc(den) != gamma * zp_lc(num)) return false;
    for (uint64_t p : primes_up_to(prime_limit)) {
        Int pd = pow_int(Int(p), static_cast<unsigned long>(delta));
        Int num_p = zp_eval(num, Int(p));
        Int den_p = zp_eval(den, Int(p));
        // The comparison below divides by den(p); the sign conditions are
        // part of what the sweep certifies.
        if (sgn(num_p) < 0 || sgn(den_p) <= 0 || gamma * pd * num_p > den_p) {
            if (witness) *witness = p;
            return false;
        }
    }
    return true;
}

std::pair<Rat, Rat> truncation_error_bound(int n, const Rat& A, const TailBoundParams& params) {
    auto [gamma, delta] = asymp_params(n);
    Rat B = zeta_tail_upper(A, delta, params);
    return {B, error_bound_upper(B, gamma)};
}

Rat truncated_product(int n, uint64_t A) {
    RatFunc rho = density::rho_local(n);
    Rat prod(1);
    for (uint64_t p : primes_up_to(A)) prod *= rho.eval(Rat(static_cast<unsigned long>(p)));
    return prod;
}

TruncationCertificate plan_truncation(int n, long D, uint64_t A_max, const TailBoundParams& params) {
    if (D < 1) throw std::invalid_argument("digit target must be >= 1");
    auto [gamma, delta] = asymp_params(n);

    // error <= 10^-D iff B <= (10^D / (10^D - 1))^gamma, checked exactly.
    Int tenD = pow_int(Int(10), static_cast<unsigned long>(D));
    Rat B_target = pow_rat(make_rat(tenD, tenD - 1), gamma);

    Rat zsum = zeta_upper(delta, params);
    Rat B = zsum;
    uint64_t best_A = 0;
    Rat err, bound_at_A;
    for (uint64_t p : primes_up_to(A_max)) {
        Int ps = pow_int(Int(p), static_cast<unsigned long>(delta));
        B *= make_rat(ps - 1, ps);
        // Exact filter: above this threshold even the true error exceeds
        // 10^-D, so the root bound cannot certify either.
        if (B > B_target) continue;
        err = error_bound_upper(B, gamma);
        if (certified_digits(err) >= D) {
            best_A = p;
            bound_at_A = B;
            break;
        }
        // The outward-rounded bound fell just short; extend the product.
    }
    if (best_A == 0) {
        // Report the best digit count the rigorous bound reaches at A_max.
        Rat best = error_bound_upper(B, gamma);
        throw std::runtime_error("no cutoff <= " + std::to_string(A_max) + " certifies 10^-" +
                                 std::to_string(D) + "; best is 10^-" +
                                 std::to_string(certified_digits(best)));
    }
    TruncationCertificate cert;
    cert.n = n;
    cert.A = best_A;
    cert.params = params;
    cert.B = bound_at_A;
    cert.error_bound = err;
    cert.digits = certified_digits(err);
    return cert;
}

CertifiedValue rho_global(int n, long D, uint64_t A_max, const TailBoundParams& params) {
    if (n < 2 || n > 8) throw std::invalid_argument("certified product exists for n in 2..8");
    // The error bound is only as good as the per-prime inequality behind it.
    static std::map<int, bool> sweep_done;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        if (!sweep_done[n]) {
            uint64_t witness = 0;
            if (!verify_asymptote_inequality(n, 10000, &witness))
                throw std::runtime_error("asymptote inequality failed at p = " +
                                         std::to_string(witness));
            sweep_done[n] = true;
        }
    }
    TruncationCertificate cert = plan_truncation(n, D, A_max, params);
    CertifiedValue cv;
    cv.value = truncated_product(n, cert.A);
    cv.decimal = decimal_string(cv.value, cert.digits);
    cv.certificate = cert;
    return cv;
}

}  // namespace euler
}  // namespace cubiclocal
