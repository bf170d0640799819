#include "cubiclocal/unknowns.hpp"

#include <stdexcept>

namespace cubiclocal {
namespace density {

namespace {
uint8_t checked(int v) {
    if (v < 1 || v > 3) throw std::invalid_argument("lifting-probability index out of range");
    return static_cast<uint8_t>(v);
}
}  // namespace

UnknownId rho() { return {Kind::rho}; }
UnknownId rho_cond(int j) { return {Kind::rho_cond, checked(j)}; }
UnknownId sigma(int i) { return {Kind::sigma, checked(i)}; }
UnknownId sigma_prime(int i) { return {Kind::sigma_prime, checked(i)}; }
UnknownId sigma_cond(int i, int k) { return {Kind::sigma_cond, checked(i), checked(k)}; }
UnknownId tau(int i, int j) { return {Kind::tau, checked(i), checked(j)}; }
UnknownId tau_prime(int i, int j) { return {Kind::tau_prime, checked(i), checked(j)}; }
UnknownId theta(int i, int j, int k) { return {Kind::theta, checked(i), checked(j), checked(k)}; }

std::string UnknownId::name() const {
    auto d = [](uint8_t v) { return std::string(1, static_cast<char>('0' + v)); };
    switch (kind) {
        case Kind::rho: return "rho";
        case Kind::rho_cond: return "rho^(" + d(a) + ")";
        case Kind::sigma: return "sigma_" + d(a);
        case Kind::sigma_prime: return "sigma'_" + d(a);
        case Kind::sigma_cond: return "sigma_" + d(a) + "^(" + d(b) + ")";
        case Kind::tau: return "tau_" + d(a) + d(b);
        case Kind::tau_prime: return "tau'_" + d(a) + d(b);
        case Kind::theta: return "theta_" + d(a) + d(b) + d(c);
    }
    return "?";
}

const std::vector<UnknownId>& all_unknowns() {
    static const std::vector<UnknownId> ids = [] {
        std::vector<UnknownId> v;
        v.push_back(rho());
        for (int j = 1; j <= 3; ++j) v.push_back(rho_cond(j));
        for (int i = 1; i <= 3; ++i) v.push_back(sigma(i));
        for (int i = 1; i <= 3; ++i) v.push_back(sigma_prime(i));
        for (int i = 1; i <= 3; ++i)
            for (int k = 1; k <= 3; ++k) v.push_back(sigma_cond(i, k));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) v.push_back(tau(i, j));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) v.push_back(tau_prime(i, j));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) v.push_back(theta(i, j, k));
        return v;
    }();
    return ids;
}

}  // namespace density
}  // namespace cubiclocal
