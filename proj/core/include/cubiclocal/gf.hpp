#ifndef CUBICLOCAL_GF_HPP
#define CUBICLOCAL_GF_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace cubiclocal {
namespace ff {

// The cubic extension F_{p^3} = F_p[x]/(modulus), with the modulus chosen
// deterministically as the first irreducible monic cubic in the ordering
// x^3 + c2 x^2 + c1 x + c0 with (c2, c1, c0) ascending lexicographically.
// Elements are coordinate vectors in the basis 1, x, x^2.
class FieldTower {
public:
    using Elt = std::array<uint32_t, 3>;

    explicit FieldTower(uint32_t p);  // throws if p is not prime or exceeds the bound

    uint32_t p() const { return p_; }
    // Coefficients (c0, c1, c2) of the modulus x^3 + c2 x^2 + c1 x + c0.
    const std::array<uint32_t, 3>& modulus() const { return mod_; }

    static constexpr uint32_t kPrimeBound = 13;

    Elt zero() const { return {0, 0, 0}; }
    Elt embed(uint32_t a) const { return {a % p_, 0, 0}; }
    bool is_zero(const Elt& a) const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
    bool in_base_field(const Elt& a) const { return a[1] == 0 && a[2] == 0; }

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt frobenius(const Elt& a) const;          // a^p
    Elt frobenius2(const Elt& a) const;         // a^(p^2)

    // Base-field helpers.
    uint32_t base_mul(uint32_t a, uint32_t b) const { return (a * b) % p_; }
    uint32_t base_inv(uint32_t a) const;  // a != 0

private:
    uint32_t p_;
    std::array<uint32_t, 3> mod_;
    std::array<Elt, 3> frob_basis_;   // images of 1, x, x^2 under y -> y^p
    std::array<Elt, 3> frob2_basis_;
    std::vector<uint32_t> inv_;

    Elt apply_linear(const std::array<Elt, 3>& images, const Elt& a) const;
    Elt pow(Elt a, uint64_t e) const;
};

FieldTower build_field_tower(uint32_t p);

}  // namespace ff
}  // namespace cubiclocal

#endif
