#include "cubiclocal/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace cubiclocal {

namespace {

void divide_out(ZPoly& a, const ZPoly& g) {
    if (g.size() == 1 && g[0] == 1) return;
    ZPoly q;
    if (!zp_divide_exact(a, g, q)) throw std::runtime_error("gcd does not divide its argument");
    a = std::move(q);
}

// Make gcd(content(num), content(den)) = 1 and lc(den) > 0.
void fix_scalars(ZPoly& n, ZPoly& d) {
    Int cn = zp_content(n);
    Int cd = zp_content(d);
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g != 1) {
        for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    if (sgn(d.back()) < 0) {
        for (auto& x : n) x = -x;
        for (auto& x : d) x = -x;
    }
}

}  // namespace

RatFunc::RatFunc(ZPoly n, ZPoly d, bool) : num_(std::move(n)), den_(std::move(d)) {}

RatFunc RatFunc::normalized(ZPoly n, ZPoly d) {
    if (zp_is_zero(d)) throw std::domain_error("division by zero in Q(t)");
    if (zp_is_zero(n)) return RatFunc();
    ZPoly g = zp_gcd(n, d);
    divide_out(n, g);
    divide_out(d, g);
    fix_scalars(n, d);
    return RatFunc(std::move(n), std::move(d), true);
}

RatFunc::RatFunc(long value) : num_{}, den_{Int(1)} {
    if (value != 0) num_ = ZPoly{Int(value)};
}

RatFunc::RatFunc(const Rat& value) : num_{}, den_{Int(1)} {
    if (value != 0) {
        num_ = ZPoly{Int(value.get_num())};
        den_ = ZPoly{Int(value.get_den())};
    }
}

RatFunc::RatFunc(const PolyQ& num, const PolyQ& den) {
    if (den.is_zero()) throw std::domain_error("division by zero in Q(t)");
    auto [zn, sn] = num.integer_scaled();
    auto [zd, sd] = den.integer_scaled();
    if (zp_is_zero(zn)) {
        num_ = {};
        den_ = ZPoly{Int(1)};
        return;
    }
    Rat s = sn / sd;
    zn = zp_mul_int(std::move(zn), s.get_num());
    zd = zp_mul_int(std::move(zd), s.get_den());
    *this = normalized(std::move(zn), std::move(zd));
}

RatFunc RatFunc::from_poly(const PolyQ& p) { return RatFunc(p, PolyQ(Rat(1))); }

RatFunc RatFunc::from_zpoly(ZPoly num, ZPoly den) { return normalized(std::move(num), std::move(den)); }

RatFunc RatFunc::t_power(long e) {
    if (e >= 0) return RatFunc(zp_tpow(static_cast<unsigned long>(e)), ZPoly{Int(1)}, true);
    return RatFunc(ZPoly{Int(1)}, zp_tpow(static_cast<unsigned long>(-e)), true);
}

bool RatFunc::is_one() const {
    return num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

long RatFunc::total_degree() const {
    if (is_zero()) return 0;
    return zp_deg(num_) + zp_deg(den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Cancel the shared part of the denominators first; with
    //   a = xn/(g*d1), b = yn/(g*d2), gcd(d1,d2)=1 (g maximal),
    // the sum is (xn*d2 + yn*d1)/(g*d1*d2) with only g left to reduce.
    ZPoly g = zp_gcd(a.den_, b.den_);
    ZPoly d1 = a.den_, d2 = b.den_;
    if (!(g.size() == 1 && g[0] == 1)) {
        ZPoly q;
        zp_divide_exact(a.den_, g, q);
        d1 = std::move(q);
        zp_divide_exact(b.den_, g, q);
        d2 = std::move(q);
    }
    ZPoly num = zp_add(zp_mul(a.num_, d2), zp_mul(b.num_, d1));
    if (zp_is_zero(num)) return RatFunc();
    ZPoly h = zp_gcd(num, g);
    if (!(h.size() == 1 && h[0] == 1)) {
        ZPoly q;
        zp_divide_exact(num, h, q);
        num = std::move(q);
        zp_divide_exact(g, h, q);
        g = std::move(q);
    }
    ZPoly den = zp_mul(zp_mul(g, d1), d2);
    // num and den are now coprime as polynomials; contents may still share.
    fix_scalars(num, den);
    return RatFunc(std::move(num), std::move(den), true);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    ZPoly g1 = zp_gcd(a.num_, b.den_);
    ZPoly g2 = zp_gcd(b.num_, a.den_);
    ZPoly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    if (!(g1.size() == 1 && g1[0] == 1)) {
        divide_out(an, g1);
        divide_out(bd, g1);
    }
    if (!(g2.size() == 1 && g2[0] == 1)) {
        divide_out(bn, g2);
        divide_out(ad, g2);
    }
    ZPoly num = zp_mul(an, bn);
    ZPoly den = zp_mul(ad, bd);
    fix_scalars(num, den);
    return RatFunc(std::move(num), std::move(den), true);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(t)");
    RatFunc binv(b.den_, b.num_, true);
    if (sgn(binv.den_.back()) < 0) {
        for (auto& c : binv.num_) c = -c;
        for (auto& c : binv.den_) c = -c;
    }
    return a * binv;
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatFuncOp op) {
    switch (op) {
        case RatFuncOp::add: return a + b;
        case RatFuncOp::sub: return a - b;
        case RatFuncOp::mul: return a * b;
        case RatFuncOp::div: return a / b;
    }
    throw std::invalid_argument("unknown ratfunc op");
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = zp_eval(den_, x);
    if (d == 0) throw std::domain_error("pole of rational function at " + rat_to_string(x));
    Rat n = zp_eval(num_, x);
    Rat r = n / d;
    return r;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string n = zpoly_str(num_, var);
    if (den_.size() == 1 && den_[0] == 1) return n;
    return "(" + n + ")/(" + zpoly_str(den_, var) + ")";
}

}  // namespace cubiclocal
