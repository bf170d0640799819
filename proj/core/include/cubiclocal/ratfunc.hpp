#ifndef CUBICLOCAL_RATFUNC_HPP
#define CUBICLOCAL_RATFUNC_HPP

#include <string>

#include "cubiclocal/poly.hpp"
#include "cubiclocal/polyz.hpp"
#include "cubiclocal/rat.hpp"

namespace cubiclocal {

// Element of Q(t) in a unique normal form:
//   num, den in Z[t];  gcd(num, den) = 1 in Q[t];
//   gcd(content(num), content(den)) = 1;  lc(den) > 0;  zero is (0, 1).
// Equality is therefore structural. All values are immutable once built.
class RatFunc {
public:
    RatFunc() : num_{}, den_{Int(1)} {}  // zero
    explicit RatFunc(long value);
    explicit RatFunc(const Rat& value);
    RatFunc(const PolyQ& num, const PolyQ& den);  // throws on den == 0

    static RatFunc from_poly(const PolyQ& p);
    static RatFunc from_zpoly(ZPoly num, ZPoly den);
    static RatFunc t_power(long e);  // t^e, negative e allowed
    static RatFunc one() { return RatFunc(1); }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    PolyQ num() const { return PolyQ::from_integers(num_); }
    PolyQ den() const { return PolyQ::from_integers(den_); }
    const ZPoly& znum() const { return num_; }
    const ZPoly& zden() const { return den_; }

    // deg num + deg den, the pivot-selection weight; 0 for the zero element.
    long total_degree() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws on b == 0
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Exact value at x; throws std::domain_error naming x at a pole.
    Rat eval(const Rat& x) const;

    std::string str(const std::string& var = "t") const;

private:
    ZPoly num_, den_;
    RatFunc(ZPoly n, ZPoly d, bool already_normalized);
    static RatFunc normalized(ZPoly n, ZPoly d);
};

enum class RatFuncOp { add, sub, mul, div };
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatFuncOp op);

}  // namespace cubiclocal

#endif
