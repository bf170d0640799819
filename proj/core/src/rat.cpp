#include "cubiclocal/rat.hpp"

#include <stdexcept>

namespace cubiclocal {

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    auto dot = s.find('.');
    try {
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash), 10);
            Int den(s.substr(slash + 1), 10);
            return make_rat(num, den);
        }
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+")
                throw std::invalid_argument(s);
            Int num(digits, 10);
            Int den = pow_int(Int(10), s.size() - dot - 1);
            return make_rat(num, den);
        }
        return Rat(Int(s, 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 raised to a negative power");
        return Rat(pow_int(base.get_den(), static_cast<unsigned long>(-e)),
                   pow_int(base.get_num(), static_cast<unsigned long>(-e)));
    }
    Rat r(pow_int(base.get_num(), static_cast<unsigned long>(e)),
          pow_int(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

long floor_log10(const Rat& x) {
    if (sgn(x) <= 0) throw std::domain_error("floor_log10 requires a positive argument");
    // First guess from decimal digit counts, then adjust exactly.
    long guess = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 10));
    auto cmp_pow10 = [&x](long e) {
        // sign of x - 10^e
        Int ten10 = pow_int(Int(10), static_cast<unsigned long>(e >= 0 ? e : -e));
        Rat p = e >= 0 ? Rat(ten10) : Rat(Int(1), ten10);
        p.canonicalize();
        return cmp(x, p);
    };
    while (cmp_pow10(guess) < 0) --guess;
    while (cmp_pow10(guess + 1) >= 0) ++guess;
    return guess;
}

long certified_digits(const Rat& x, long cap) {
    if (sgn(x) <= 0) return cap;
    if (x >= 1) return 0;
    long e = floor_log10(x);  // 10^e <= x < 10^{e+1}, e <= -1
    long d = -(e + 1);        // x < 10^{e+1} = 10^{-d} may fail to be <=; check boundary
    // x <= 10^{-D} <=> D <= -log10(x); d as above always works, d+1 works iff x <= 10^{-(d+1)} = 10^e,
    // i.e. iff x == 10^e exactly.
    Rat p(Int(1), pow_int(Int(10), static_cast<unsigned long>(-e)));
    p.canonicalize();
    if (x == p) ++d;
    return d > cap ? cap : d;
}

}  // namespace cubiclocal
