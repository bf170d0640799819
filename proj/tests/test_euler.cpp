#include <mpfr.h>

#include <thread>

#include "doctest.h"

#include "cubiclocal/bernoulli.hpp"
#include "cubiclocal/certify.hpp"
#include "cubiclocal/decimal.hpp"
#include "cubiclocal/density.hpp"
#include "cubiclocal/golden.hpp"
#include "cubiclocal/primes.hpp"
#include "cubiclocal/zeta.hpp"

using namespace cubiclocal;
using namespace cubiclocal::euler;

namespace {

// Exact rational below/above an mpfr value computed with directed rounding.
Rat mpfr_bracket(long s, const Rat& prime_product, bool upper) {
    // reference = zeta(s) * prime_product at 200 bits
    mpfr_t z;
    mpfr_init2(z, 200);
    mpfr_zeta_ui(z, static_cast<unsigned long>(s), upper ? MPFR_RNDU : MPFR_RNDD);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), z);
    mpfr_clear(z);
    Rat zr(mant);
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    if (e >= 0)
        zr *= Rat(shift);
    else
        zr /= Rat(shift);
    return zr * prime_product;
}

Rat prime_factor_product(uint64_t A, long s) {
    Rat prod(1);
    for (uint64_t p : primes_up_to(A)) {
        Int ps = pow_int(Int(p), static_cast<unsigned long>(s));
        prod *= make_rat(ps - 1, ps);
    }
    return prod;
}

}  // namespace

TEST_CASE("primes") {
    auto ps = primes_up_to(30);
    CHECK(ps == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    CHECK(is_prime(2));
    CHECK(is_prime(12919));
    CHECK_FALSE(is_prime(12917 * 3));
    CHECK(is_prime((1ull << 61) - 1));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(2) == make_rat(1, 6));
    CHECK(bernoulli(4) == make_rat(-1, 30));
    CHECK(bernoulli(10) == make_rat(5, 66));
    CHECK(bernoulli(12) == make_rat(-691, 2730));
    CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
    CHECK_THROWS_AS(bernoulli(-2), std::invalid_argument);
}

TEST_CASE("zeta tail bound brackets the Basel value") {
    Rat b = zeta_tail_upper(Rat(1), 2);
    // pi^2/6 <= b <= pi^2/6 + 1e-9
    Rat lo = mpfr_bracket(2, Rat(1), false);
    Rat hi = mpfr_bracket(2, Rat(1), true);
    CHECK(b >= lo);
    CHECK(b - hi <= make_rat(1, 1000000000));
}

TEST_CASE("zeta tail bound at s = 4, A = 2") {
    Rat b = zeta_tail_upper(Rat(2), 4);
    Rat ref_lo = mpfr_bracket(4, make_rat(15, 16), false);
    Rat ref_hi = mpfr_bracket(4, make_rat(15, 16), true);
    CHECK(ref_lo <= b);
    CHECK(b - ref_hi < make_rat(1, 1000000000));
}

TEST_CASE("zeta tail bound is a true upper bound") {
    for (long s : {2l, 3l, 4l}) {
        for (uint64_t A : {1ull, 2ull, 10ull}) {
            Rat bound = zeta_tail_upper(Rat(static_cast<unsigned long>(A)), s);
            Rat reference = mpfr_bracket(s, prime_factor_product(A, s), false);
            CHECK(bound >= reference);
        }
    }
}

TEST_CASE("removing Euler factors can only lower the bound") {
    CHECK(zeta_tail_upper(Rat(10ul), 22) <= zeta_tail_upper(Rat(2ul), 22));
}

TEST_CASE("raising M or I moves the bound by at most the dropped remainder") {
    auto remainder_term = [](long s, const TailBoundParams& q) -> Rat {
        Int rise = 1;
        for (long i = 0; i < 2 * q.I + 1; ++i) rise *= s + i;
        Int fac;
        mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(2 * q.I + 2));
        Int den = fac * pow_int(Int(q.M), static_cast<unsigned long>(s + 2 * q.I + 1));
        return abs(bernoulli(2 * q.I + 2)) * make_rat(rise, den);
    };
    for (long s : {2l, 3l, 5l}) {
        for (TailBoundParams base : {TailBoundParams{50, 2}, TailBoundParams{100, 4}}) {
            Rat b0 = zeta_upper(s, base);
            for (TailBoundParams bigger :
                 {TailBoundParams{base.M * 2, base.I}, TailBoundParams{base.M, base.I + 2}}) {
                Rat b1 = zeta_upper(s, bigger);
                Rat slack = 2 * (remainder_term(s, base) + remainder_term(s, bigger));
                CHECK(abs(b1 - b0) <= slack);
            }
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(zeta_tail_upper(Rat(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(zeta_tail_upper(make_rat(1, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(zeta_tail_upper(Rat(1), 2, {0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(zeta_tail_upper(Rat(1), 2, {10, 3}), std::invalid_argument);
}

TEST_CASE("error bound root") {
    CHECK(error_bound_upper(Rat(1), 3) == Rat(0));
    // 1 - B^{-1/gamma} for B = (10/9)^3, gamma = 3 is exactly 1/10.
    Rat B = pow_rat(make_rat(10, 9), 3);
    Rat err = error_bound_upper(B, 3);
    CHECK(err >= make_rat(1, 10));
    CHECK(err < make_rat(102, 1000));
    CHECK_THROWS_AS(error_bound_upper(make_rat(1, 2), 3), std::invalid_argument);
}

TEST_CASE("asymptote inequality") {
    CHECK(verify_asymptote_inequality(3, 10000));
    // Direct substitution at n = 2, p = 2: gamma p^delta g(p) = 24 * 313 = 7512
    // against h(2) = 3 * 73 * 17 * 5 = 18615.
    RatFunc one_minus = RatFunc(1) - density::rho_local(2);
    CHECK(zp_eval(one_minus.znum(), Int(2)) * 24 <= zp_eval(one_minus.zden(), Int(2)));
    CHECK(zp_eval(density::golden_record(2).g, Int(2)) == 313);
    CHECK(zp_eval(density::golden_record(2).h, Int(2)) == 18615);

    // Mutating the numerator's leading coefficient breaks the sweep at a
    // small prime (the slack h - gamma p^delta g only covers lower orders).
    ZPoly bad_g = one_minus.znum();
    bad_g.back() += 1;
    bool holds = true;
    for (uint64_t p : primes_up_to(100)) {
        if (3 * pow_int(Int(p), 3) * zp_eval(bad_g, Int(p)) > zp_eval(one_minus.zden(), Int(p)))
            holds = false;
    }
    CHECK_FALSE(holds);
}

TEST_CASE("certificates reproduce the reference truncation rows") {
    // (n, A, D) rows cheap enough for a unit test; the rest run in acceptance.
    struct Row {
        int n;
        uint64_t A;
        long D;
    };
    for (Row r : {Row{4, 5, 16}, Row{5, 3, 21}, Row{8, 5, 141}}) {
        auto [B, err] = truncation_error_bound(r.n, Rat(static_cast<unsigned long>(r.A)));
        CHECK(B >= 1);
        CHECK(certified_digits(err) >= r.D);
    }
}

TEST_CASE("planner finds minimal cutoffs and reports failures") {
    TruncationCertificate cert = plan_truncation(5, 21, 100);
    CHECK(cert.A <= 3);
    CHECK(cert.digits >= 21);
    CHECK(cert.B >= 1);
    CHECK_THROWS_AS(plan_truncation(2, 10, 100), std::runtime_error);
    CHECK_THROWS_AS(plan_truncation(2, 0, 100), std::invalid_argument);
}

TEST_CASE("certified global density for n = 4") {
    CertifiedValue cv = rho_global(4, 16);
    CHECK(cv.certificate.digits >= 16);
    CHECK(scientific_string(Rat(1) - cv.value, 4) == "5.022e-9");
    // The decimal string is the correctly rounded truncated product.
    CHECK(cv.decimal.substr(0, 12) == "0.9999999949");
    CHECK_THROWS_AS(rho_global(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(rho_global(9, 5), std::invalid_argument);
}

TEST_CASE("certificate soundness across scales") {
    // Products at A = 5 and A = 179 differ by less than the A = 5 bound.
    auto [B, err] = truncation_error_bound(4, Rat(5ul));
    Rat p5 = truncated_product(4, 5);
    Rat p179 = truncated_product(4, 179);
    CHECK(abs(p5 - p179) < err);
}

TEST_CASE("products are independent of evaluation order and partition") {
    RatFunc rho = density::rho_local(3);
    auto primes = primes_up_to(179);
    Rat forward(1), backward(1), evens(1), odds(1);
    for (size_t i = 0; i < primes.size(); ++i) {
        Rat factor = rho.eval(Rat(static_cast<unsigned long>(primes[i])));
        forward *= factor;
        (i % 2 ? odds : evens) *= factor;
    }
    for (size_t i = primes.size(); i-- > 0;)
        backward *= rho.eval(Rat(static_cast<unsigned long>(primes[i])));
    CHECK(forward == truncated_product(3, 179));
    CHECK(backward == forward);
    CHECK(evens * odds == forward);
}

TEST_CASE("bernoulli memo is safe under concurrent access") {
    std::vector<std::thread> workers;
    std::array<Rat, 8> results;
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&results, t] { results[t] = bernoulli(2 * (t % 4) + 2); });
    for (auto& w : workers) w.join();
    CHECK(results[0] == make_rat(1, 6));
    CHECK(results[1] == make_rat(-1, 30));
    CHECK(results[2] == make_rat(1, 42));
    CHECK(results[3] == make_rat(-1, 30));
}
