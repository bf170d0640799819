#include "cubiclocal/polyz.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace cubiclocal {

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long zp_deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

bool zp_is_zero(const ZPoly& a) { return a.empty(); }

const Int& zp_lc(const ZPoly& a) {
    if (a.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return a.back();
}

ZPoly zp_const(const Int& c) {
    if (c == 0) return {};
    return {c};
}

ZPoly zp_tpow(unsigned long e) {
    ZPoly r(e + 1, Int(0));
    r[e] = 1;
    return r;
}

ZPoly zp_tpow_minus_one(unsigned long e) {
    if (e == 0) return {};
    ZPoly r(e + 1, Int(0));
    r[0] = -1;
    r[e] = 1;
    return r;
}

ZPoly zp_tpow_plus_one(unsigned long e) {
    if (e == 0) return {Int(2)};
    ZPoly r(e + 1, Int(0));
    r[0] = 1;
    r[e] = 1;
    return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_neg(ZPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    zp_trim(r);
    return r;
}

ZPoly zp_mul_int(ZPoly a, const Int& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

ZPoly zp_pow(const ZPoly& a, unsigned long e) {
    ZPoly r = zp_const(1);
    ZPoly base = a;
    while (e) {
        if (e & 1) r = zp_mul(r, base);
        e >>= 1;
        if (e) base = zp_mul(base, base);
    }
    return r;
}

long zp_valuation(const ZPoly& a) {
    if (a.empty()) throw std::domain_error("valuation of zero polynomial");
    long v = 0;
    while (a[v] == 0) ++v;
    return v;
}

bool zp_is_monomial(const ZPoly& a) {
    if (a.empty()) return false;
    for (size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

Int zp_content(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zp_primitive_part(const ZPoly& a) {
    if (a.empty()) return {};
    Int c = zp_content(a);
    ZPoly r = a;
    if (c != 1)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

Int zp_eval(const ZPoly& a, const Int& x) {
    Int r = 0;
    for (size_t i = a.size(); i-- > 0;) {
        r *= x;
        r += a[i];
    }
    return r;
}

Rat zp_eval(const ZPoly& a, const Rat& x) {
    // a(u/v) = (sum a_k u^k v^{d-k}) / v^d
    if (a.empty()) return Rat(0);
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    Int num = 0;
    Int upow = 1;
    size_t d = a.size() - 1;
    std::vector<Int> vpow(d + 1);
    vpow[0] = 1;
    for (size_t i = 1; i <= d; ++i) vpow[i] = vpow[i - 1] * v;
    for (size_t k = 0; k <= d; ++k) {
        if (a[k] != 0) num += a[k] * upow * vpow[d - k];
        if (k < d) upow *= u;
    }
    Rat r(num, vpow[d]);
    r.canonicalize();
    return r;
}

bool zp_divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (a.empty()) {
        quotient.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, Int(0));
    const Int& blc = b.back();
    for (size_t k = a.size() - b.size() + 1; k-- > 0;) {
        Int& top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), blc.get_mpz_t())) return false;
        Int qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), blc.get_mpz_t());
        q[k] = qk;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(), b[j].get_mpz_t());
        }
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    quotient = std::move(q);
    zp_trim(quotient);
    return true;
}

namespace {

// ---- word-sized prime field arithmetic for the modular gcd ----

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64_local(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin bases for n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Shared pool of ~62-bit primes, grown on demand.
std::vector<uint64_t>& gcd_prime_pool() {
    static std::vector<uint64_t> pool;
    return pool;
}
std::mutex gcd_prime_mutex;

uint64_t gcd_prime(size_t idx) {
    std::lock_guard<std::mutex> lock(gcd_prime_mutex);
    auto& pool = gcd_prime_pool();
    uint64_t candidate = pool.empty() ? ((1ull << 62) - 1) : pool.back() - 2;
    while (pool.size() <= idx) {
        while (!is_prime_u64_local(candidate)) candidate -= 2;
        pool.push_back(candidate);
        candidate -= 2;
    }
    return pool[idx];
}

using ModPoly = std::vector<uint64_t>;

void mod_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const ZPoly& a, uint64_t p) {
    ModPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    }
    mod_trim(r);
    return r;
}

// Monic gcd over F_p via the Euclidean algorithm.
ModPoly mod_gcd(ModPoly a, ModPoly b, uint64_t p) {
    while (!b.empty()) {
        // a mod b
        uint64_t inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            uint64_t q = mulmod(a.back(), inv, p);
            size_t shift = a.size() - b.size();
            if (q != 0) {
                for (size_t j = 0; j < b.size(); ++j) {
                    uint64_t s = mulmod(q, b[j], p);
                    uint64_t& c = a[j + shift];
                    c = (c >= s) ? c - s : c + p - s;
                }
            }
            a.pop_back();
            mod_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (a.empty()) return a;
    uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

}  // namespace

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
    auto positive_lc = [](ZPoly g) {
        if (!g.empty() && sgn(g.back()) < 0)
            for (auto& c : g) c = -c;
        return g;
    };
    if (a.empty()) return positive_lc(b);
    if (b.empty()) return positive_lc(a);

    Int ca = zp_content(a);
    Int cb = zp_content(b);
    Int c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly pa = a, pb = b;
    if (ca != 1)
        for (auto& x : pa) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ca.get_mpz_t());
    if (cb != 1)
        for (auto& x : pb) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cb.get_mpz_t());

    if (pa.size() == 1 || pb.size() == 1) return zp_const(c);

    // Monomial fast path: gcd(t^e, B) = t^min(e, val(B)).
    if (zp_is_monomial(pa) || zp_is_monomial(pb)) {
        long v = std::min(zp_valuation(pa), zp_valuation(pb));
        ZPoly g = zp_mul_int(zp_tpow(static_cast<unsigned long>(v)), c);
        return g;
    }

    Int lcg;
    mpz_gcd(lcg.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

    long best_deg = -1;
    std::vector<Int> crt;   // symmetric-range CRT accumulator, scaled by lcg
    Int modulus = 1;
    bool stable = false;

    for (size_t pi = 0;; ++pi) {
        uint64_t p = gcd_prime(pi);
        if (mpz_fdiv_ui(pa.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(pb.back().get_mpz_t(), p) == 0)
            continue;
        ModPoly gp = mod_gcd(reduce_mod(pa, p), reduce_mod(pb, p), p);
        long dg = static_cast<long>(gp.size()) - 1;
        if (dg == 0) return zp_const(c);  // primitive parts are coprime
        if (best_deg != -1 && dg > best_deg) continue;  // unlucky prime
        if (best_deg == -1 || dg < best_deg) {
            best_deg = dg;
            crt.assign(dg + 1, Int(0));
            modulus = 1;
            stable = false;
        }
        // Scale the monic image so it reduces lcg * (gcd / lc(gcd)).
        uint64_t scale = mpz_fdiv_ui(lcg.get_mpz_t(), p);
        bool changed = false;
        Int pz(static_cast<unsigned long>(p));
        Int minv;
        if (modulus != 1) {
            if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
                throw std::runtime_error("CRT modulus inversion failed");
        }
        Int new_modulus = modulus * pz;
        Int half = new_modulus / 2;
        for (long i = 0; i <= best_deg; ++i) {
            uint64_t img = mulmod(gp[i], scale, p);
            Int v;
            if (modulus == 1) {
                v = Int(static_cast<unsigned long>(img));
            } else {
                // v = crt[i] + modulus * ((img - crt[i]) * minv mod p)
                Int delta = Int(static_cast<unsigned long>(img)) - crt[i];
                Int k = (delta * minv) % pz;
                if (sgn(k) < 0) k += pz;
                v = crt[i] + modulus * k;
            }
            if (v > half) v -= new_modulus;
            if (v != crt[i]) {
                crt[i] = v;
                changed = true;
            }
        }
        modulus = new_modulus;
        if (!changed && modulus != pz) {
            stable = true;
        }
        if (stable) {
            ZPoly cand = crt;
            zp_trim(cand);
            if (!cand.empty() && static_cast<long>(cand.size()) - 1 == best_deg) {
                cand = zp_primitive_part(cand);
                if (sgn(cand.back()) < 0)
                    for (auto& x : cand) x = -x;
                ZPoly q;
                if (zp_divide_exact(pa, cand, q) && zp_divide_exact(pb, cand, q)) {
                    return zp_mul_int(cand, c);
                }
            }
            stable = false;
        }
    }
}

ZPoly zp_gcd_euclid_reference(const ZPoly& a, const ZPoly& b) {
    auto positive_lc = [](ZPoly g) {
        if (!g.empty() && sgn(g.back()) < 0)
            for (auto& c : g) c = -c;
        return g;
    };
    if (a.empty()) return positive_lc(b);
    if (b.empty()) return positive_lc(a);
    Int c;
    mpz_gcd(c.get_mpz_t(), zp_content(a).get_mpz_t(), zp_content(b).get_mpz_t());

    using QP = std::vector<Rat>;
    auto to_monic = [](const ZPoly& z) {
        QP q(z.size());
        for (size_t i = 0; i < z.size(); ++i) q[i] = Rat(z[i]);
        Rat lc = q.back();
        for (auto& x : q) x /= lc;
        return q;
    };
    QP u = to_monic(a), v = to_monic(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (true) {
        // r = u mod v, both monic
        QP r = u;
        while (r.size() >= v.size()) {
            Rat q = r.back();
            size_t shift = r.size() - v.size();
            for (size_t j = 0; j < v.size(); ++j) r[j + shift] -= q * v[j];
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        if (r.empty()) break;
        Rat lc = r.back();
        for (auto& x : r) x /= lc;
        u = std::move(v);
        v = std::move(r);
    }
    // v is the monic gcd; clear denominators, take the primitive part.
    Int den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    ZPoly g(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(den);
        g[i] = scaled.get_num();
    }
    g = zp_primitive_part(g);
    return zp_mul_int(positive_lc(std::move(g)), c);
}

}  // namespace cubiclocal
