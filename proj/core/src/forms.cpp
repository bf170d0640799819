#include "cubiclocal/forms.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cubiclocal {
namespace ff {

namespace {
std::mutex registry_mutex;
}

const MonomialIndex& MonomialIndex::get(int n) {
    static std::map<int, MonomialIndex> cache;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    MonomialIndex mi;
    mi.n = n;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) mi.triples.push_back({i, j, k});
    return cache.emplace(n, std::move(mi)).first->second;
}

size_t MonomialIndex::index_of(int i, int j, int k) const {
    // Binary search works since triples are stored in lexicographic order.
    std::array<int, 3> key{i, j, k};
    auto it = std::lower_bound(triples.begin(), triples.end(), key);
    if (it == triples.end() || *it != key) throw std::out_of_range("bad monomial triple");
    return static_cast<size_t>(it - triples.begin());
}

bool CubicForm::is_zero() const {
    for (uint8_t c : coeffs)
        if (c) return false;
    return true;
}

CubicForm make_form(int n, uint32_t p,
                    const std::vector<std::pair<std::array<int, 3>, uint32_t>>& terms) {
    const MonomialIndex& mi = MonomialIndex::get(n);
    CubicForm f{n, p, std::vector<uint8_t>(mi.size(), 0)};
    for (const auto& [t, v] : terms) {
        f.coeffs[mi.index_of(t[0], t[1], t[2])] =
            static_cast<uint8_t>((f.coeffs[mi.index_of(t[0], t[1], t[2])] + v) % p);
    }
    return f;
}

const FormOracle& FormOracle::get(int n, uint32_t p, uint64_t budget) {
    static std::map<std::pair<int, uint32_t>, std::unique_ptr<FormOracle>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(n, p);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto oracle = std::unique_ptr<FormOracle>(new FormOracle(n, p, budget));
    return *cache.emplace(key, std::move(oracle)).first->second;
}

FormOracle::FormOracle(int n, uint32_t p, uint64_t budget) : n_(n), p_(p), tower_(p) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const MonomialIndex& mi = MonomialIndex::get(n);
    const int nv = n + 1;

    uint64_t candidates = 1;
    for (int i = 0; i < 3 * nv; ++i) {
        candidates *= p;
        if (candidates > budget)
            throw std::invalid_argument("enumeration of " + std::to_string(p) + "^" +
                                        std::to_string(3 * nv) +
                                        " linear forms exceeds the budget " + std::to_string(budget));
    }

    using Elt = FieldTower::Elt;
    std::vector<Elt> ell(nv), ell1(nv), ell2(nv);
    std::vector<uint32_t> digits(3 * nv, 0);

    // Coefficients of the quadratic ell * (sigma ell) on monomials u <= v,
    // then of the cubic on the monomial index; all over F_{p^3}.
    std::vector<Elt> quad(static_cast<size_t>(nv) * nv);
    std::vector<Elt> cubic(mi.size());

    for (uint64_t code = 1; code < candidates; ++code) {
        // Decode the candidate linear form from base-p digits.
        uint64_t c = code;
        for (int i = 0; i < 3 * nv; ++i) {
            digits[i] = static_cast<uint32_t>(c % p);
            c /= p;
        }
        for (int i = 0; i < nv; ++i) ell[i] = {digits[3 * i], digits[3 * i + 1], digits[3 * i + 2]};

        // Dimension of the F_p-span of the coefficients (echelon on <= nv
        // vectors of length 3).
        Elt rows[3];
        int rank = 0;
        for (int i = 0; i < nv && rank < 3; ++i) {
            Elt v = ell[i];
            for (int r = 0; r < rank; ++r) {
                // eliminate with pivot of row r
                int piv = 0;
                while (rows[r][piv] == 0) ++piv;
                if (v[piv]) {
                    uint32_t factor = tower_.base_mul(v[piv], tower_.base_inv(rows[r][piv]));
                    for (int k = 0; k < 3; ++k)
                        v[k] = (v[k] + (p - factor) * rows[r][k] % p) % p;
                }
            }
            if (!tower_.is_zero(v)) rows[rank++] = v;
        }
        if (rank == 0) continue;  // cannot happen for code >= 1

        for (int i = 0; i < nv; ++i) {
            ell1[i] = tower_.frobenius(ell[i]);
            ell2[i] = tower_.frobenius2(ell[i]);
        }

        // Expand the norm form ell * sigma(ell) * sigma^2(ell).
        for (auto& q : quad) q = tower_.zero();
        for (int u = 0; u < nv; ++u) {
            if (tower_.is_zero(ell[u])) continue;
            for (int v = 0; v < nv; ++v) {
                if (tower_.is_zero(ell1[v])) continue;
                auto prod = tower_.mul(ell[u], ell1[v]);
                size_t idx = static_cast<size_t>(std::min(u, v)) * nv + std::max(u, v);
                quad[idx] = tower_.add(quad[idx], prod);
            }
        }
        for (auto& cc : cubic) cc = tower_.zero();
        for (int u = 0; u < nv; ++u) {
            for (int v = u; v < nv; ++v) {
                const Elt& q = quad[static_cast<size_t>(u) * nv + v];
                if (tower_.is_zero(q)) continue;
                for (int w = 0; w < nv; ++w) {
                    if (tower_.is_zero(ell2[w])) continue;
                    auto prod = tower_.mul(q, ell2[w]);
                    int a = u, b = v, cw = w;  // sort (u, v, w)
                    if (cw < a) std::swap(a, cw);
                    if (cw < b) std::swap(b, cw);
                    size_t idx = mi.index_of(a, b, cw);
                    cubic[idx] = tower_.add(cubic[idx], prod);
                }
            }
        }

        // Galois invariance forces the product into the base field.
        CubicForm f{n, p, std::vector<uint8_t>(mi.size(), 0)};
        for (size_t i = 0; i < mi.size(); ++i) {
            if (!tower_.in_base_field(cubic[i]))
                throw std::runtime_error("norm form has a coefficient outside F_p");
            f.coeffs[i] = static_cast<uint8_t>(cubic[i][0]);
        }
        if (f.is_zero()) throw std::runtime_error("norm form vanished");
        reps_[rank].insert(canonical(f));
    }
}

std::vector<uint8_t> FormOracle::canonical(const CubicForm& f) const {
    std::vector<uint8_t> c = f.coeffs;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i]) {
            uint32_t inv = tower_.base_inv(c[i]);
            for (auto& x : c) x = static_cast<uint8_t>(x * inv % p_);
            break;
        }
    }
    return c;
}

const std::set<std::vector<uint8_t>>& FormOracle::representatives(int i) const {
    if (i < 1 || i > 3) throw std::invalid_argument("factorization type must be 1, 2 or 3");
    return reps_[i];
}

std::vector<CubicForm> FormOracle::type_forms(int i) const {
    std::vector<CubicForm> out;
    for (const auto& rep : representatives(i)) {
        for (uint32_t s = 1; s < p_; ++s) {
            CubicForm f{n_, p_, rep};
            for (auto& c : f.coeffs) c = static_cast<uint8_t>(c * s % p_);
            out.push_back(std::move(f));
        }
    }
    return out;
}

int FormOracle::classify(const CubicForm& f) const {
    if (f.n != n_ || f.p != p_) throw std::invalid_argument("form belongs to a different oracle");
    if (f.is_zero()) throw std::invalid_argument("cannot classify the zero form");
    auto c = canonical(f);
    for (int i = 1; i <= 3; ++i)
        if (reps_[i].count(c)) return i;
    return 0;
}

namespace {

// Restriction of f to the first m variables, as a coefficient functor:
// evaluates the restricted form at a projective point over F_p.
uint32_t eval_restricted(const CubicForm& f, const std::vector<uint32_t>& x) {
    const MonomialIndex& mi = MonomialIndex::get(f.n);
    uint64_t acc = 0;
    const int m = static_cast<int>(x.size());
    for (size_t idx = 0; idx < mi.size(); ++idx) {
        if (!f.coeffs[idx]) continue;
        const auto& t = mi.triples[idx];
        if (t[2] >= m) continue;  // triples are sorted, but keep the scan simple
        acc += static_cast<uint64_t>(f.coeffs[idx]) * x[t[0]] % f.p * x[t[1]] % f.p * x[t[2]] % f.p;
    }
    return static_cast<uint32_t>(acc % f.p);
}

// Does the restriction of f to the first m variables vanish at some point of
// P^{m-1}(F_p)?
bool restriction_has_projective_zero(const CubicForm& f, int m) {
    const uint32_t p = f.p;
    // Points with leading coordinate 1 at position s and zeros before it.
    std::vector<uint32_t> x(m, 0);
    for (int s = 0; s < m; ++s) {
        std::fill(x.begin(), x.end(), 0u);
        x[s] = 1;
        uint64_t free_vars = m - 1 - s;
        uint64_t count = 1;
        for (uint64_t i = 0; i < free_vars; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            uint64_t c = code;
            for (int i = s + 1; i < m; ++i) {
                x[i] = static_cast<uint32_t>(c % p);
                c /= p;
            }
            if (eval_restricted(f, x) == 0) return true;
        }
    }
    return false;
}

}  // namespace

bool check_condition(const CubicForm& f, int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("condition index must be 1, 2 or 3");
    if (j > f.n + 1)
        throw std::invalid_argument("condition (" + std::to_string(j) + ") undefined for n = " +
                                    std::to_string(f.n));
    if (j == 1) {
        const MonomialIndex& mi = MonomialIndex::get(f.n);
        return f.coeffs[mi.index_of(0, 0, 0)] != 0;
    }
    return !restriction_has_projective_zero(f, j);
}

TypeCounts FormOracle::count(std::optional<int> condition) const {
    const Int q(p_);
    const unsigned long B = static_cast<unsigned long>(MonomialIndex::get(n_).size());
    TypeCounts tc;
    if (!condition) {
        tc.total = pow_int(q, B) - 1;
        for (int i = 1; i <= 3; ++i)
            tc.by_type[i] = Int(static_cast<unsigned long>(reps_[i].size())) * (q - 1);
    } else {
        int j = *condition;
        if (j < 1 || j > 3) throw std::invalid_argument("condition index must be 1, 2 or 3");
        if (j > n_ + 1)
            throw std::invalid_argument("condition (" + std::to_string(j) +
                                        ") undefined for n = " + std::to_string(n_));
        // Number of forms satisfying the condition: the constraint touches only
        // the coefficients of the first j variables, the rest are free.
        switch (j) {
            case 1: tc.total = (q - 1) * pow_int(q, B - 1); break;
            case 2: tc.total = (q - 1) * (q - 1) * (q + 1) * pow_int(q, B - 3) / 3; break;
            case 3: tc.total = (q - 1) * (q - 1) * (q - 1) * (q + 1) * pow_int(q, B - 7) / 3; break;
        }
        for (int i = 1; i <= 3; ++i) {
            Int kept = 0;
            for (const auto& rep : reps_[i]) {
                CubicForm f{n_, p_, rep};
                if (check_condition(f, j)) ++kept;
            }
            tc.by_type[i] = kept * (q - 1);
        }
    }
    tc.by_type[0] = tc.total - tc.by_type[1] - tc.by_type[2] - tc.by_type[3];
    if (sgn(tc.by_type[0]) < 0) throw std::runtime_error("negative type-0 count");
    return tc;
}

std::vector<CubicForm> generate_type_forms(int n, uint32_t p, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("factorization type must be 1, 2 or 3");
    if (i > n + 1) return {};  // span dimension cannot exceed the variable count
    return FormOracle::get(n, p).type_forms(i);
}

int classify_form(const CubicForm& f) { return FormOracle::get(f.n, f.p).classify(f); }

TypeCounts count_types(int n, uint32_t p, std::optional<int> condition) {
    return FormOracle::get(n, p).count(condition);
}

Int grassmannian_points(int r, int k, const Int& q) {
    if (r < 0 || r > k) return 0;
    // Gaussian binomial [k, r]_q = prod_{i=0}^{r-1} (q^{k-i} - 1) / (q^{i+1} - 1).
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= pow_int(q, static_cast<unsigned long>(k - i)) - 1;
        den *= pow_int(q, static_cast<unsigned long>(i + 1)) - 1;
    }
    return num / den;
}

}  // namespace ff
}  // namespace cubiclocal
