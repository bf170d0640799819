#include "cubiclocal/golden.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "cubiclocal/density.hpp"
#include "cubiclocal/primes.hpp"

namespace cubiclocal {
namespace density {

namespace {

ZPoly S(std::initializer_list<std::pair<long, long>> terms) {
    ZPoly r;
    for (const auto& [e, c] : terms) {
        if (static_cast<size_t>(e) >= r.size()) r.resize(e + 1, Int(0));
        r[e] += c;
    }
    zp_trim(r);
    return r;
}

ZPoly prod(std::initializer_list<ZPoly> factors) {
    ZPoly r = zp_const(1);
    for (const auto& f : factors) r = zp_mul(r, f);
    return r;
}

ZPoly M(unsigned long e) { return zp_tpow_minus_one(e); }
ZPoly P(unsigned long e) { return zp_tpow_plus_one(e); }
ZPoly T(unsigned long e) { return zp_tpow(e); }
ZPoly C(long c) { return zp_const(c); }
ZPoly pw(const ZPoly& b, unsigned long e) { return zp_pow(b, e); }

GoldenRecord build_golden(int n) {
    GoldenRecord r;
    r.n = n;
    switch (n) {
        case 1:
            r.g = pw(P(2), 2);
            r.h = prod({C(3), S({{4, 1}, {3, 1}, {2, 1}, {1, 1}, {0, 1}})});
            break;
        case 2:
            r.g = S({{9, 1}, {8, -1}, {6, 1}, {4, -1}, {3, 1}, {2, 1}, {1, -2}, {0, 1}});
            r.h = prod({C(3), S({{6, 1}, {3, 1}, {0, 1}}), P(4), P(2)});
            break;
        case 3:
            r.g = prod({S({{26, 3}, {24, 1}, {23, 1}, {22, 4}, {21, -3}, {20, 3}, {19, 2}, {18, 2},
                           {17, -1}, {14, 1}, {13, 1}, {12, -2}, {11, 3}, {7, 3}}),
                        P(2), pw(P(1), 2), pw(M(1), 4)});
            r.h = prod({C(9), M(13), P(7), M(7), P(6), M(5), P(3), M(3)});
            break;
        case 4:
            r.g = prod({S({{46, 1}, {41, 3}, {40, 1}, {39, -1}, {37, 1}, {36, 1}, {35, 1}, {34, -3},
                           {27, 3}, {26, -1}, {25, 1}, {19, 1}}),
                        P(2), pw(P(1), 2), pw(M(1), 4)});
            r.h = prod({C(9), M(19), M(17), P(10), P(9), M(9), M(7), P(5)});
            break;
        case 5:
            r.g = prod({S({{91, 3},  {90, -3}, {88, 3},  {85, 3},  {84, -3}, {82, 3},  {81, -3},
                           {79, 3},  {78, 3},  {76, 3},  {75, -3}, {73, 3},  {72, -2}, {71, 1},
                           {70, 4},  {69, -3}, {67, 3},  {66, -3}, {64, 3},  {62, -3}, {61, 3},
                           {59, 3},  {58, 3},  {56, -3}, {55, 3},  {53, -3}, {52, 3},  {49, 3},
                           {47, -3}, {46, 3},  {44, -3}, {43, 3},  {41, -3}, {40, 3},  {38, -3},
                           {37, 3}}),
                        M(5), P(2), pw(P(1), 2), pw(M(1), 4)});
            r.h = prod({C(27), M(27), M(25), M(23), P(14), P(13), M(13), P(12), P(7), M(7), P(6)});
            break;
        case 6:
            r.g = prod({S({{105, 3}, {97, 1}, {96, 1}, {95, 1}, {93, -3}, {81, 3}}), pw(P(1), 2),
                        pw(M(1), 7)});
            r.h = prod({C(27), M(31),
                        S({{24, 1}, {23, -1}, {19, 1}, {18, -1}, {17, 1}, {16, -1}, {14, 1},
                           {13, -1}, {12, 1}, {11, -1}, {10, 1}, {8, -1}, {7, 1}, {6, -1}, {5, 1},
                           {1, -1}, {0, 1}}),
                        S({{20, 1}, {19, -1}, {17, 1}, {16, -1}, {14, 1}, {13, -1}, {11, 1},
                           {10, -1}, {9, 1}, {7, -1}, {6, 1}, {4, -1}, {3, 1}, {1, -1}, {0, 1}}),
                        P(17), M(17), P(16), M(11),
                        S({{8, 1}, {7, 1}, {5, -1}, {4, -1}, {3, -1}, {1, 1}, {0, 1}}),
                        S({{8, 1}, {7, -1}, {5, 1}, {4, -1}, {3, 1}, {1, -1}, {0, 1}}), P(8), P(6),
                        P(5), M(5), P(4), P(3), pw(M(3), 3)});
            break;
        case 7:
            r.g = prod({P(4), pw(P(2), 2), pw(P(1), 4), pw(M(1), 9), T(141)});
            r.h = prod({C(27), M(43), M(41),
                        S({{24, 1}, {23, -1}, {21, 1}, {20, -1}, {18, 1}, {17, -1}, {15, 1},
                           {14, -1}, {12, 1}, {10, -1}, {9, 1}, {7, -1}, {6, 1}, {4, -1}, {3, 1},
                           {1, -1}, {0, 1}}),
                        P(22), P(20), P(19), M(19), M(13),
                        S({{12, 1}, {11, 1}, {9, -1}, {8, -1}, {6, 1}, {4, -1}, {3, -1}, {1, 1},
                           {0, 1}}),
                        S({{12, 1}, {11, -1}, {9, 1}, {8, -1}, {6, 1}, {4, -1}, {3, 1}, {1, -1},
                           {0, 1}}),
                        P(11), M(11), P(10),
                        S({{8, 1}, {7, -1}, {5, 1}, {4, -1}, {3, 1}, {1, -1}, {0, 1}}), P(7), P(5),
                        M(5), pw(M(3), 3)});
            break;
        case 8:
            r.g = prod({M(9), M(7), P(4), pw(P(2), 2), pw(P(1), 3), pw(M(1), 9), T(219)});
            r.h = prod({C(27), M(53), M(49), M(47),
                        S({{40, 1}, {39, -1}, {35, 1}, {34, -1}, {30, 1}, {28, -1}, {25, 1},
                           {23, -1}, {20, 1}, {17, -1}, {15, 1}, {12, -1}, {10, 1}, {6, -1}, {5, 1},
                           {1, -1}, {0, 1}}),
                        S({{32, 1}, {31, -1}, {29, 1}, {28, -1}, {26, 1}, {25, -1}, {23, 1},
                           {22, -1}, {20, 1}, {19, -1}, {17, 1}, {16, -1}, {15, 1}, {13, -1},
                           {12, 1}, {10, -1}, {9, 1}, {7, -1}, {6, 1}, {4, -1}, {3, 1}, {1, -1},
                           {0, 1}}),
                        P(27), M(27), P(26), P(25), M(25), P(24), M(17), P(13), M(13), P(12), M(11),
                        P(6), pw(M(3), 3)});
            break;
        default:
            throw std::invalid_argument("golden record exists only for n in 1..8");
    }

    for (uint64_t p : primes_up_to(100)) {
        if (zp_eval(r.h, Int(p)) == 0)
            throw std::runtime_error("golden denominator vanishes at a prime");
    }
    return r;
}

}  // namespace

const GoldenRecord& golden_record(int n) {
    static std::map<int, GoldenRecord> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, build_golden(n)).first->second;
}

bool golden_check(int n, const RatFunc& rho) {
    const GoldenRecord& rec = golden_record(n);
    RatFunc one_minus = RatFunc(1) - rho;
    // The reference fractions are not all in lowest form: compare
    // cross-multiplied, num * h == g * den.
    return zp_mul(one_minus.znum(), rec.h) == zp_mul(rec.g, one_minus.zden());
}

bool golden_check(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("golden check is defined for n in 1..8");
    return golden_check(n, rho_local(n));
}

}  // namespace density
}  // namespace cubiclocal
