#include "cubiclocal/gf.hpp"

#include <stdexcept>
#include <string>

#include "cubiclocal/primes.hpp"

namespace cubiclocal {
namespace ff {

FieldTower::FieldTower(uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p > kPrimeBound)
        throw std::invalid_argument("prime " + std::to_string(p) + " exceeds the tower bound " +
                                    std::to_string(kPrimeBound));

    inv_.assign(p_, 0);
    for (uint32_t a = 1; a < p_; ++a) {
        for (uint32_t b = 1; b < p_; ++b) {
            if (a * b % p_ == 1) {
                inv_[a] = b;
                break;
            }
        }
    }

    // First monic cubic with no root in F_p; for degree 3 that is equivalent
    // to irreducibility.
    bool found = false;
    for (uint32_t code = 0; code < p_ * p_ * p_ && !found; ++code) {
        uint32_t c0 = code % p_;
        uint32_t c1 = (code / p_) % p_;
        uint32_t c2 = code / (p_ * p_);
        bool has_root = false;
        for (uint32_t x = 0; x < p_ && !has_root; ++x) {
            uint32_t v = (((x + c2) * x + c1) % p_ * x + c0) % p_;
            if (v == 0) has_root = true;
        }
        if (!has_root) {
            mod_ = {c0, c1, c2};
            found = true;
        }
    }
    if (!found) throw std::runtime_error("no irreducible cubic found");  // cannot happen

    for (int i = 0; i < 3; ++i) {
        Elt basis = zero();
        basis[i] = 1;
        frob_basis_[i] = pow(basis, p_);
    }
    for (int i = 0; i < 3; ++i) {
        Elt basis = zero();
        basis[i] = 1;
        frob2_basis_[i] = pow(basis, static_cast<uint64_t>(p_) * p_);
    }

    // The Frobenius must be an order-3 bijection fixing exactly F_p.
    for (int i = 0; i < 3; ++i) {
        Elt basis = zero();
        basis[i] = 1;
        Elt f3 = frobenius(frobenius2(basis));
        if (f3 != basis) throw std::runtime_error("Frobenius does not have order 3");
    }
    Elt x = {0, 1, 0};
    if (frobenius(x) == x) throw std::runtime_error("Frobenius fixes a generator");
}

FieldTower::Elt FieldTower::add(const Elt& a, const Elt& b) const {
    return {(a[0] + b[0]) % p_, (a[1] + b[1]) % p_, (a[2] + b[2]) % p_};
}

FieldTower::Elt FieldTower::sub(const Elt& a, const Elt& b) const {
    return {(a[0] + p_ - b[0]) % p_, (a[1] + p_ - b[1]) % p_, (a[2] + p_ - b[2]) % p_};
}

FieldTower::Elt FieldTower::mul(const Elt& a, const Elt& b) const {
    // Schoolbook product, then reduce x^3 = -(c2 x^2 + c1 x + c0) twice.
    uint32_t c[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < 3; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    }
    for (int k = 4; k >= 3; --k) {
        uint32_t v = c[k];
        if (v == 0) continue;
        c[k] = 0;
        c[k - 1] = (c[k - 1] + (p_ - mod_[2]) * v) % p_;
        c[k - 2] = (c[k - 2] + (p_ - mod_[1]) * v) % p_;
        c[k - 3] = (c[k - 3] + (p_ - mod_[0]) * v) % p_;
    }
    return {c[0], c[1], c[2]};
}

FieldTower::Elt FieldTower::apply_linear(const std::array<Elt, 3>& images, const Elt& a) const {
    Elt r = zero();
    for (int i = 0; i < 3; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < 3; ++j) r[j] = (r[j] + a[i] * images[i][j]) % p_;
    }
    return r;
}

FieldTower::Elt FieldTower::frobenius(const Elt& a) const { return apply_linear(frob_basis_, a); }

FieldTower::Elt FieldTower::frobenius2(const Elt& a) const { return apply_linear(frob2_basis_, a); }

FieldTower::Elt FieldTower::pow(Elt a, uint64_t e) const {
    Elt r = embed(1);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t FieldTower::base_inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return inv_[a % p_];
}

FieldTower build_field_tower(uint32_t p) { return FieldTower(p); }

}  // namespace ff
}  // namespace cubiclocal
