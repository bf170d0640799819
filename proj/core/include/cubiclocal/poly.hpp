#ifndef CUBICLOCAL_POLY_HPP
#define CUBICLOCAL_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "cubiclocal/polyz.hpp"
#include "cubiclocal/rat.hpp"

namespace cubiclocal {

// Dense univariate polynomial over Q, ascending degree. The zero polynomial
// has an empty coefficient list; otherwise the last coefficient is nonzero.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(const Rat& c);
    explicit PolyQ(std::vector<Rat> coeffs);
    static PolyQ t_power(unsigned long e);
    static PolyQ from_integers(const ZPoly& z);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    PolyQ& operator*=(const Rat& s);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
    friend PolyQ operator*(PolyQ a, const Rat& s) { return a *= s; }
    friend PolyQ operator*(const Rat& s, PolyQ a) { return a *= s; }
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;

    // poly == scale * primitive integer polynomial (scale = 0 iff zero poly).
    std::pair<ZPoly, Rat> integer_scaled() const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rat> c_;
    void trim();
};

std::string zpoly_str(const ZPoly& p, const std::string& var = "t");

}  // namespace cubiclocal

#endif
