#include "cubiclocal/decimal.hpp"

#include <stdexcept>

namespace cubiclocal {

namespace {

// Round num/den to the nearest integer, ties to even. den > 0.
Int round_nearest(const Int& num, const Int& den) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice = 2 * r;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    return q;
}

}  // namespace

std::string decimal_string(const Rat& x, long digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    bool neg = sgn(x) < 0;
    Rat ax = abs(x);
    Int scaled = round_nearest(ax.get_num() * pow_int(Int(10), static_cast<unsigned long>(digits)),
                              ax.get_den());
    std::string s = scaled.get_str();
    if (static_cast<long>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    if (neg && scaled != 0) out.insert(0, "-");
    return out;
}

SigDigits sig_digits(const Rat& x, int k) {
    if (sgn(x) <= 0) throw std::domain_error("sig_digits requires a positive argument");
    if (k < 1) throw std::invalid_argument("need at least one significant digit");
    long e = floor_log10(x);
    // mantissa = round(x / 10^(e-k+1))
    long shift = e - k + 1;
    Int num = x.get_num(), den = x.get_den();
    if (shift >= 0)
        den *= pow_int(Int(10), static_cast<unsigned long>(shift));
    else
        num *= pow_int(Int(10), static_cast<unsigned long>(-shift));
    Int m = round_nearest(num, den);
    std::string digits = m.get_str();
    if (static_cast<int>(digits.size()) > k) {  // rounded up to the next power of 10
        digits = digits.substr(0, k);
        ++e;
    }
    return SigDigits{digits, e};
}

std::string scientific_string(const Rat& x, int k) {
    if (x == 0) throw std::domain_error("scientific_string requires a nonzero argument");
    SigDigits sd = sig_digits(abs(x), k);
    std::string mant = sd.mantissa.substr(0, 1);
    if (sd.mantissa.size() > 1) mant += "." + sd.mantissa.substr(1);
    std::string out = (sgn(x) < 0 ? "-" : "") + mant + "e";
    if (sd.exp10 >= 0) out += "+";
    out += std::to_string(sd.exp10);
    return out;
}

std::string decimal_upper_bound_string(const Rat& x) {
    if (x == 0) return "0";
    if (sgn(x) < 0) throw std::domain_error("upper bound rendering expects x >= 0");
    long e = floor_log10(x);
    long shift = e - 1;  // two significant digits
    Int num = x.get_num(), den = x.get_den();
    if (shift >= 0)
        den *= pow_int(Int(10), static_cast<unsigned long>(shift));
    else
        num *= pow_int(Int(10), static_cast<unsigned long>(-shift));
    Int m;
    mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // ceiling
    std::string digits = m.get_str();
    if (digits.size() > 2) {
        digits = digits.substr(0, 2);
        ++e;
    }
    std::string out = digits.substr(0, 1) + "." + digits.substr(1) + "e";
    if (e >= 0) out += "+";
    out += std::to_string(e);
    return out;
}

}  // namespace cubiclocal
