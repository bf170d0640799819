#include <random>

#include "doctest.h"

#include "cubiclocal/decimal.hpp"
#include "cubiclocal/poly.hpp"
#include "cubiclocal/polyz.hpp"
#include "cubiclocal/rat.hpp"
#include "cubiclocal/ratfunc.hpp"

using namespace cubiclocal;

namespace {

PolyQ P(std::initializer_list<long> asc) {
    std::vector<Rat> c;
    for (long v : asc) c.emplace_back(v);
    return PolyQ(std::move(c));
}

RatFunc RF(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RatFunc(P(num), P(den));
}

std::mt19937_64 rng(20260810);

RatFunc random_ratfunc() {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 4);
    auto poly = [&](bool nonzero) {
        while (true) {
            std::vector<Rat> c;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
            PolyQ p{std::move(c)};
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RatFunc(poly(false), poly(true));
}

}  // namespace

TEST_CASE("rational scalars") {
    CHECK(rat_to_string(make_rat(4, -6)) == "-2/3");
    CHECK(make_rat(0, 5) == Rat(0));
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
    CHECK(rat_from_string("-7/21") == make_rat(-1, 3));
    CHECK(rat_from_string("12") == Rat(12));
    CHECK_THROWS_AS(rat_from_string("a/b"), std::invalid_argument);
    CHECK(pow_rat(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(floor_log10(make_rat(999, 1000)) == -1);
    CHECK(floor_log10(Rat(1000)) == 3);
    CHECK(floor_log10(make_rat(1, 1000)) == -3);
    CHECK(certified_digits(make_rat(1, 1000)) == 3);
    CHECK(certified_digits(make_rat(1, 999)) == 2);
    CHECK(certified_digits(make_rat(1, 1001)) == 3);
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(make_rat(68, 93), 10) == "0.7311827957");
    CHECK(decimal_string(make_rat(-1, 8), 2) == "-0.12");  // ties to even
    CHECK(decimal_string(Rat(5), 0) == "5");
    CHECK(decimal_string(make_rat(1, 2), 0) == "0");  // ties to even
    CHECK(decimal_string(make_rat(3, 2), 0) == "2");
    CHECK(decimal_string(make_rat(68, 93), 0) == "1");
    CHECK(scientific_string(make_rat(1, 300), 4) == "3.333e-3");
    CHECK(scientific_string(make_rat(-9999, 10), 3) == "-1.00e+3");
    auto sd = sig_digits(make_rat(1, 300), 4);
    CHECK(sd.mantissa == "3333");
    CHECK(sd.exp10 == -3);
    CHECK(decimal_upper_bound_string(make_rat(999, 100000)) == "1.0e-2");
    CHECK(decimal_upper_bound_string(make_rat(31, 1000)) == "3.1e-2");
}

TEST_CASE("polynomial arithmetic") {
    PolyQ a = P({1, 2, 3});
    PolyQ b = P({-1, 1});
    CHECK((a * b).coeffs() == P({-1, -1, -1, 3}).coeffs());
    CHECK((a + (-a)).is_zero());
    CHECK(a.eval(Rat(2)) == Rat(17));
    CHECK(P({}).degree() == -1);
    CHECK(PolyQ(Rat(0)).is_zero());
    auto [z, scale] = PolyQ({make_rat(1, 2), make_rat(3, 4)}).integer_scaled();
    CHECK(z == ZPoly{Int(2), Int(3)});
    CHECK(scale == make_rat(1, 4));
}

TEST_CASE("integer polynomial gcd matches the monic Euclidean reference") {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 7);
    auto rand_zpoly = [&]() {
        ZPoly p(deg(rng) + 1);
        for (auto& c : p) c = coeff(rng);
        zp_trim(p);
        return p;
    };
    for (int iter = 0; iter < 200; ++iter) {
        ZPoly a = rand_zpoly(), b = rand_zpoly(), m = rand_zpoly();
        ZPoly am = zp_mul(a, m), bm = zp_mul(b, m);
        CHECK(zp_gcd(am, bm) == zp_gcd_euclid_reference(am, bm));
    }
    CHECK(zp_gcd({}, {}) == ZPoly{});
    CHECK(zp_gcd(zp_tpow(5), zp_mul_int(zp_tpow(3), Int(4))) == zp_tpow(3));
}

TEST_CASE("exact division") {
    ZPoly q;
    CHECK(zp_divide_exact(zp_tpow_minus_one(6), zp_tpow_minus_one(3), q));
    CHECK(q == zp_tpow_plus_one(3));
    CHECK_FALSE(zp_divide_exact(zp_tpow_minus_one(5), zp_tpow_minus_one(3), q));
    CHECK_FALSE(zp_divide_exact({Int(3)}, {Int(2)}, q));
}

TEST_CASE("rational function normal form") {
    // common factor cancellation
    CHECK(RF({-1, 0, 1}, {-1, 1}) == RF({1, 1}, {1}));
    // zero normal form
    CHECK(RatFunc(P({}), P({0, 7})) == RatFunc());
    CHECK(RatFunc(P({}), P({0, 7})).den() == P({1}));
    // sign and content normalization
    RatFunc c = RF({2, 2}, {-4});
    CHECK(c.num() == P({-1, -1}));
    CHECK(c.den() == P({2}));
    CHECK_THROWS_WITH_AS(RatFunc(P({1}), P({})), "division by zero in Q(t)", std::domain_error);
}

TEST_CASE("normal-form uniqueness under cross-multiplied equality") {
    for (int iter = 0; iter < 100; ++iter) {
        RatFunc a = random_ratfunc();
        RatFunc junk = random_ratfunc();
        // Multiply num and den by the same nonzero polynomial and a scalar.
        PolyQ m = junk.den() * P({3});
        RatFunc b(a.num() * m, a.den() * m);
        CHECK(a == b);
        CHECK(a.num() == b.num());
        CHECK(a.den() == b.den());
    }
}

TEST_CASE("field arithmetic in Q(t)") {
    RatFunc one(1);
    CHECK(RF({1}, {-1, 1}) + RF({1}, {1, 1}) == RF({0, 2}, {-1, 0, 1}));
    CHECK((random_ratfunc() * RatFunc()).is_zero());
    RatFunc t3 = RatFunc(P({0, 0, 0, 1}), P({-1, 1}));
    RatFunc t1 = RatFunc(P({0, 1}), P({-1, 1}));
    CHECK(t3 / t1 == RatFunc::from_poly(P({0, 0, 1})));
    CHECK_THROWS_AS(one / RatFunc(), std::domain_error);
    CHECK(ratfunc_arith(t3, t1, RatFuncOp::div) == RatFunc::from_poly(P({0, 0, 1})));

    for (int iter = 0; iter < 60; ++iter) {
        RatFunc a = random_ratfunc(), b = random_ratfunc(), c = random_ratfunc();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a - a == RatFunc());
        CHECK(a * one == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
    CHECK(RF({0, 1}, {-1, 1}).eval(Rat(0)) == Rat(0));
    CHECK_THROWS_AS(RF({0, 1}, {-1, 1}).eval(Rat(1)), std::domain_error);

    // 1 - (t^2+1)^2 / (3(t^4+t^3+t^2+t+1)) at t = 2 is 68/93
    PolyQ sq = P({1, 0, 1}) * P({1, 0, 1});
    RatFunc f = RatFunc(Rat(1)) - RatFunc(sq, P({3, 3, 3, 3, 3}));
    CHECK(f.eval(Rat(2)) == make_rat(68, 93));

    std::uniform_int_distribution<long> pts(-5, 5);
    for (int iter = 0; iter < 60; ++iter) {
        RatFunc a = random_ratfunc(), b = random_ratfunc();
        Rat x(pts(rng), 1 + static_cast<unsigned long>(iter % 3));
        x.canonicalize();
        try {
            Rat lhs_add = (a + b).eval(x);
            Rat lhs_mul = (a * b).eval(x);
            CHECK(lhs_add == a.eval(x) + b.eval(x));
            CHECK(lhs_mul == a.eval(x) * b.eval(x));
        } catch (const std::domain_error&) {
            // pole of a, b, or the combination; nothing to compare
        }
    }
}

TEST_CASE("decimal input parsing") {
    CHECK(rat_from_string("2.5") == make_rat(5, 2));
    CHECK(rat_from_string("-0.125") == make_rat(-1, 8));
    CHECK(rat_from_string("61") == Rat(61));
    CHECK_THROWS_AS(rat_from_string("."), std::invalid_argument);
}
