#include "cubiclocal/xi.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cubiclocal {
namespace density {

unsigned long binom(long m, int k) {
    if (m < k) return 0;
    unsigned long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long>(m - k + i) / i;
    return r;
}

namespace {

// Sum of signed powers of t given as (exponent, coefficient) pairs.
ZPoly tsum(std::initializer_list<std::pair<long, long>> terms) {
    ZPoly r;
    for (const auto& [e, c] : terms) {
        if (static_cast<size_t>(e) >= r.size()) r.resize(e + 1, Int(0));
        r[e] += c;
    }
    zp_trim(r);
    return r;
}

XiTable build_xi(int n, std::optional<int> condition) {
    if (n < 0) throw std::invalid_argument("xi table needs n >= 0");
    if (condition) {
        int j = *condition;
        if (j < 1 || j > 3) throw std::invalid_argument("condition index must be 1, 2 or 3");
        if (j > n + 1)
            throw std::invalid_argument("condition (" + std::to_string(j) +
                                        ") undefined for n = " + std::to_string(n));
    }

    XiTable x;
    x.n = n;
    x.condition = condition;

    if (n == 0) {
        // f = a x0^3 is always a triple hyperplane.
        x.values = {RatFunc(0), RatFunc(1), RatFunc(0), RatFunc(0)};
        return x;
    }

    const long B = static_cast<long>(binom(n + 3, 3));
    auto frac = [](ZPoly num, ZPoly den) { return RatFunc::from_zpoly(std::move(num), std::move(den)); };

    if (!condition) {
        ZPoly qB1 = zp_tpow_minus_one(B);
        x.values[1] = frac(zp_tpow_minus_one(n + 1), qB1);
        x.values[2] = frac(tsum({{2 * n + 2, 1}, {n + 2, -1}, {n + 1, -1}, {1, 1}}),
                           zp_mul_int(qB1, Int(3)));
        x.values[3] = frac(tsum({{3 * n + 3, 1}, {2 * n + 4, -1}, {2 * n + 3, -1}, {2 * n + 2, -1},
                                 {n + 4, 1}, {n + 3, 1}, {n + 2, 1}, {3, -1}}),
                           zp_mul_int(zp_mul(tsum({{2, 1}, {1, 1}, {0, 1}}), qB1), Int(3)));
    } else {
        switch (*condition) {
            case 1:
                x.values[1] = frac(zp_const(1), zp_tpow(B - n - 1));
                x.values[2] = frac(tsum({{n + 1, 1}, {n, 1}, {1, -1}, {0, -1}}),
                                   zp_mul_int(zp_tpow(B - n - 1), Int(3)));
                x.values[3] = frac(tsum({{2 * n - 1, 1}, {n, -1}, {n - 1, -1}, {0, 1}}),
                                   zp_mul_int(zp_tpow(B - n - 2), Int(3)));
                break;
            case 2:
                x.values[1] = RatFunc(0);
                x.values[2] = frac(zp_const(1), zp_tpow(B - 2 * n - 2));
                x.values[3] = frac(zp_tpow_minus_one(n - 1), zp_tpow(B - 2 * n - 2));
                break;
            case 3:
                x.values[1] = RatFunc(0);
                x.values[2] = RatFunc(0);
                x.values[3] = frac(zp_const(1), zp_tpow(B - 3 * n - 4));
                break;
        }
    }
    x.values[0] = RatFunc(1) - x.values[1] - x.values[2] - x.values[3];
    return x;
}

}  // namespace

const XiTable& xi_table(int n, std::optional<int> condition) {
    static std::map<std::pair<int, int>, XiTable> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(n, condition ? *condition : 0);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, build_xi(n, condition)).first->second;
}

}  // namespace density
}  // namespace cubiclocal
