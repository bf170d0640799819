#include "cubiclocal/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cubiclocal {

PolyQ::PolyQ(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::t_power(unsigned long e) {
    std::vector<Rat> c(e + 1, Rat(0));
    c[e] = 1;
    return PolyQ(std::move(c));
}

PolyQ PolyQ::from_integers(const ZPoly& z) {
    std::vector<Rat> c(z.size());
    for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i]);
    return PolyQ(std::move(c));
}

const Rat& PolyQ::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(r);
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Rat PolyQ::eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

std::pair<ZPoly, Rat> PolyQ::integer_scaled() const {
    if (c_.empty()) return {ZPoly{}, Rat(0)};
    Int den = 1;
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Int scaled = c_[i].get_num() * (den / c_[i].get_den());
        z[i] = scaled;
    }
    Int content = zp_content(z);
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    Rat scale(content, den);
    scale.canonicalize();
    return {std::move(z), scale};
}

namespace {

template <typename Coeff>
std::string poly_str_impl(const std::vector<Coeff>& c, const std::string& var,
                          const std::string& (*to_str)(const Coeff&, std::string&)) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    std::string buf;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        const std::string& s = to_str(c[k], buf);
        bool neg = !s.empty() && s[0] == '-';
        std::string mag = neg ? s.substr(1) : s;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (mag == "1");
        if (k == 0) {
            os << mag;
        } else {
            if (!unit) os << mag << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

const std::string& rat_str(const Rat& c, std::string& buf) {
    buf = rat_to_string(c);
    return buf;
}

const std::string& int_str(const Int& c, std::string& buf) {
    buf = c.get_str();
    return buf;
}

}  // namespace

std::string PolyQ::str(const std::string& var) const { return poly_str_impl(c_, var, rat_str); }

std::string zpoly_str(const ZPoly& p, const std::string& var) { return poly_str_impl(p, var, int_str); }

}  // namespace cubiclocal
