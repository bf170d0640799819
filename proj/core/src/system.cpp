#include "cubiclocal/system.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubiclocal/xi.hpp"

namespace cubiclocal {
namespace density {

Stage stage_of(const UnknownId& u) {
    switch (u.kind) {
        case Kind::theta: return Stage::theta;
        case Kind::sigma_cond:
        case Kind::tau:
        case Kind::tau_prime: return Stage::middle;
        default: return Stage::final;
    }
}

namespace {

// Whether an unknown has a defining relation at this n; the remaining ones
// are either identically zero (sigma_{n+1}, tau with i+j = n+1,
// theta with i+j+k = n+1) or unreachable and pruned to zero.
bool has_relation(int n, const UnknownId& u) {
    switch (u.kind) {
        case Kind::rho: return true;
        case Kind::rho_cond: return u.a <= n + 1;
        case Kind::sigma: return u.a <= n;
        case Kind::sigma_prime: return u.a <= n;
        case Kind::sigma_cond: return u.a + u.b <= n + 1;
        case Kind::tau: return u.a + u.b <= n;
        case Kind::tau_prime: return u.a + u.b <= n;
        case Kind::theta: return u.a + u.b + u.c <= n;
    }
    return false;
}

struct Builder {
    int n;
    LinearSystem sys;

    bool forced(const UnknownId& u) const { return sys.forced_zeros.count(u) != 0; }

    // Adds coeff * u to the row. Terms on known-zero unknowns (the vanishing
    // sigma/tau/theta cases) are substituted away; any other forced-zero
    // unknown must only ever be hit by a vanishing xi coefficient.
    void add_term(Row& row, const UnknownId& u, const RatFunc& coeff, bool known_zero_substitution) {
        if (coeff.is_zero()) return;
        if (forced(u)) {
            if (!known_zero_substitution)
                throw std::runtime_error("row for " + row.subject.name() +
                                         " references pruned unknown " + u.name() +
                                         " with nonzero coefficient");
            return;  // substituted as zero
        }
        auto it = row.coeffs.find(u);
        if (it == row.coeffs.end())
            row.coeffs.emplace(u, coeff);
        else {
            it->second += coeff;
            if (it->second.is_zero()) row.coeffs.erase(it);
        }
    }

    void push(Row row) { sys.rows.push_back(std::move(row)); }

    RatFunc inv_tpow(long e) const { return RatFunc::t_power(-e); }
};

}  // namespace

LinearSystem build_system(int n) {
    if (n < 1) throw std::invalid_argument("build_system needs n >= 1");
    Builder b;
    b.n = n;
    b.sys.n = n;

    for (const auto& u : all_unknowns()) {
        bool known_zero = (u.kind == Kind::sigma && u.a == n + 1) ||
                          (u.kind == Kind::tau && u.a + u.b == n + 1) ||
                          (u.kind == Kind::theta && u.a + u.b + u.c == n + 1);
        if (known_zero || !has_relation(n, u)) b.sys.forced_zeros.insert(u);
    }

    const RatFunc one(1);

    for (const auto& u : all_unknowns()) {
        if (b.forced(u)) continue;
        Row row;
        row.subject = u;
        row.coeffs.emplace(u, one);
        const int i = u.a, j = u.b, k = u.c;

        switch (u.kind) {
            case Kind::rho: {
                // rho = xi_{n,0} + sum_i xi_{n,i} sigma_i
                const XiTable& xi = xi_table(n);
                row.constant = xi.values[0];
                for (int t = 1; t <= 3; ++t) b.add_term(row, sigma(t), -xi.values[t], true);
                break;
            }
            case Kind::rho_cond: {
                const XiTable& xi = xi_table(n, i);
                row.constant = xi.values[0];
                for (int t = 1; t <= 3; ++t) b.add_term(row, sigma(t), -xi.values[t], true);
                break;
            }
            case Kind::sigma: {
                // sigma_i = (1 - P)(xi_{n-i,0} + sum_j xi_{n-i,j} tau_{ij}) + P sigma'_i,
                // P = 1/t^binom(n-i+3,3)
                RatFunc P = b.inv_tpow(static_cast<long>(binom(n - i + 3, 3)));
                const XiTable& xi = xi_table(n - i);
                RatFunc live = one - P;
                row.constant = live * xi.values[0];
                for (int t = 1; t <= 3; ++t) b.add_term(row, tau(i, t), -(live * xi.values[t]), true);
                b.add_term(row, sigma_prime(i), -P, false);
                break;
            }
            case Kind::sigma_prime: {
                // sigma'_i = 1 - Q + Q((1 - P)(xi_{n-i,0} + sum_j xi_{n-i,j} sigma_j^(i)) + P rho^(i)),
                // Q = 1/t^(i binom(n-i+2,2)), P = 1/t^binom(n-i+3,3)
                RatFunc Q = b.inv_tpow(static_cast<long>(i) * static_cast<long>(binom(n - i + 2, 2)));
                RatFunc P = b.inv_tpow(static_cast<long>(binom(n - i + 3, 3)));
                const XiTable& xi = xi_table(n - i);
                RatFunc live = Q * (one - P);
                row.constant = one - Q + live * xi.values[0];
                for (int t = 1; t <= 3; ++t)
                    b.add_term(row, sigma_cond(t, i), -(live * xi.values[t]), true);
                b.add_term(row, rho_cond(i), -(Q * P), false);
                break;
            }
            case Kind::sigma_cond: {
                // sigma_i^(k) = xi^(k)_{n-i,0} + sum_j xi^(k)_{n-i,j} tau_{ij}
                const XiTable& xi = xi_table(n - i, j);
                row.constant = xi.values[0];
                for (int t = 1; t <= 3; ++t) b.add_term(row, tau(i, t), -xi.values[t], true);
                break;
            }
            case Kind::tau: {
                // tau_{ij} = (1 - R) + R((1 - P)(xi_{n-i-j,0} + sum_k xi_{n-i-j,k} theta_{ijk}) + P tau'_{ij}),
                // R = 1/t^(i binom(n-i-j+2,2)), P = 1/t^binom(n-i-j+3,3)
                RatFunc R = b.inv_tpow(static_cast<long>(i) * static_cast<long>(binom(n - i - j + 2, 2)));
                RatFunc P = b.inv_tpow(static_cast<long>(binom(n - i - j + 3, 3)));
                const XiTable& xi = xi_table(n - i - j);
                RatFunc live = R * (one - P);
                row.constant = one - R + live * xi.values[0];
                for (int t = 1; t <= 3; ++t)
                    b.add_term(row, theta(i, j, t), -(live * xi.values[t]), true);
                b.add_term(row, tau_prime(i, j), -(R * P), false);
                break;
            }
            case Kind::tau_prime: {
                // tau'_{ij} = 1 - S + S(xi^(i)_{n-j,0} + sum_k xi^(i)_{n-j,k} sigma_k^(j)),
                // S = 1/t^(ij(n-i-j+1) + j binom(n-i-j+2,2))
                long e = static_cast<long>(i) * j * (n - i - j + 1) +
                         static_cast<long>(j) * static_cast<long>(binom(n - i - j + 2, 2));
                RatFunc S = b.inv_tpow(e);
                const XiTable& xi = xi_table(n - j, i);
                row.constant = one - S + S * xi.values[0];
                for (int t = 1; t <= 3; ++t)
                    b.add_term(row, sigma_cond(t, j), -(S * xi.values[t]), true);
                break;
            }
            case Kind::theta: {
                // theta_{ijk} = 1 - T + T(xi^(i)_{n-j-k,0} + sum_l xi^(i)_{n-j-k,l} theta_{jkl}),
                // T = 1/t^(ij(n-i-j-k+1) + j binom(n-i-j-k+2,2))
                long e = static_cast<long>(i) * j * (n - i - j - k + 1) +
                         static_cast<long>(j) * static_cast<long>(binom(n - i - j - k + 2, 2));
                RatFunc T = b.inv_tpow(e);
                const XiTable& xi = xi_table(n - j - k, i);
                row.constant = one - T + T * xi.values[0];
                for (int t = 1; t <= 3; ++t) {
                    RatFunc coeff = -(T * xi.values[t]);
                    // theta_{ijk} may reference itself when (j,k,t) == (i,j,k).
                    b.add_term(row, theta(j, k, t), coeff, true);
                }
                break;
            }
        }
        b.push(std::move(row));
    }

    std::set<UnknownId> subjects;
    for (const auto& row : b.sys.rows)
        if (!subjects.insert(row.subject).second)
            throw std::runtime_error("duplicate defining row for " + row.subject.name());
    if (subjects.size() + b.sys.forced_zeros.size() != all_unknowns().size())
        throw std::runtime_error("system does not partition the unknowns");

    return b.sys;
}

const RatFunc& ProbabilityTable::at(const UnknownId& u) const {
    auto it = solution.find(u);
    if (it == solution.end()) throw std::out_of_range("no solution entry for " + u.name());
    return it->second;
}

namespace {

struct WorkRow {
    std::map<UnknownId, RatFunc> coeffs;
    RatFunc constant;
};

void solve_stage(std::vector<WorkRow>& rows, std::map<UnknownId, RatFunc>& solution) {
    // Forward elimination with full pivoting on minimal total degree,
    // deterministic tie-break by (unknown, position).
    struct Pivot {
        size_t row;
        UnknownId col;
    };
    std::vector<Pivot> pivots;
    std::vector<bool> used(rows.size(), false);
    std::set<UnknownId> eliminated;

    for (size_t step = 0; step < rows.size(); ++step) {
        long best = -1;
        size_t best_row = 0;
        UnknownId best_col{};
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            for (const auto& [u, c] : rows[r].coeffs) {
                if (eliminated.count(u) || c.is_zero()) continue;
                long deg = c.total_degree();
                if (best < 0 || deg < best ||
                    (deg == best && (u < best_col || (u == best_col && r < best_row)))) {
                    best = deg;
                    best_row = r;
                    best_col = u;
                }
            }
        }
        if (best < 0) {
            for (size_t r = 0; r < rows.size(); ++r)
                if (!used[r] && !rows[r].constant.is_zero())
                    throw std::runtime_error("inconsistent stage system");
            break;
        }
        const RatFunc pivot_coeff = rows[best_row].coeffs.at(best_col);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == best_row || used[r]) continue;
            auto it = rows[r].coeffs.find(best_col);
            if (it == rows[r].coeffs.end() || it->second.is_zero()) continue;
            RatFunc factor = it->second / pivot_coeff;
            rows[r].coeffs.erase(it);
            for (const auto& [u, c] : rows[best_row].coeffs) {
                if (u == best_col) continue;
                auto jt = rows[r].coeffs.find(u);
                if (jt == rows[r].coeffs.end()) {
                    RatFunc v = -(factor * c);
                    if (!v.is_zero()) rows[r].coeffs.emplace(u, std::move(v));
                } else {
                    jt->second -= factor * c;
                    if (jt->second.is_zero()) rows[r].coeffs.erase(jt);
                }
            }
            rows[r].constant -= factor * rows[best_row].constant;
        }
        used[best_row] = true;
        eliminated.insert(best_col);
        pivots.push_back({best_row, best_col});
    }

    // Back-substitution in reverse pivot order.
    for (size_t s = pivots.size(); s-- > 0;) {
        const auto& [ri, u] = pivots[s];
        RatFunc value = rows[ri].constant;
        for (const auto& [v, c] : rows[ri].coeffs) {
            if (v == u) continue;
            auto it = solution.find(v);
            if (it == solution.end())
                throw std::runtime_error("stage system is singular at " + v.name());
            if (!it->second.is_zero()) value -= c * it->second;
        }
        solution.emplace(u, value / rows[ri].coeffs.at(u));
    }
}

}  // namespace

ProbabilityTable solve_staged(const LinearSystem& sys) {
    ProbabilityTable table;
    table.n = sys.n;
    for (const auto& u : sys.forced_zeros) table.solution.emplace(u, RatFunc());

    for (Stage stage : {Stage::theta, Stage::middle, Stage::final}) {
        std::vector<WorkRow> rows;
        std::vector<UnknownId> subjects;
        for (const auto& row : sys.rows) {
            if (stage_of(row.subject) != stage) continue;
            WorkRow wr;
            wr.constant = row.constant;
            for (const auto& [u, c] : row.coeffs) {
                if (stage_of(u) == stage) {
                    wr.coeffs.emplace(u, c);
                } else {
                    // Earlier-stage unknown: substitute its solved value.
                    auto it = table.solution.find(u);
                    if (it == table.solution.end())
                        throw std::runtime_error("row for " + row.subject.name() +
                                                 " references unsolved " + u.name());
                    if (!it->second.is_zero()) wr.constant -= c * it->second;
                }
            }
            subjects.push_back(row.subject);
            rows.push_back(std::move(wr));
        }
        size_t before = table.solution.size();
        solve_stage(rows, table.solution);
        if (table.solution.size() - before != subjects.size())
            throw std::runtime_error("stage system is singular");
    }

    // Solved probabilities must lie in [0, 1] at every prime of the check set.
    for (uint64_t p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
                       41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul, 89ul, 97ul}) {
        for (const auto& [u, v] : table.solution) {
            Rat val = v.eval(Rat(p));
            if (sgn(val) < 0 || val > 1)
                throw std::runtime_error(u.name() + " is outside [0, 1] at p = " +
                                         std::to_string(p));
        }
    }
    return table;
}

RatFunc residual(const Row& row, const ProbabilityTable& table) {
    RatFunc acc = -row.constant;
    for (const auto& [u, c] : row.coeffs) acc += c * table.at(u);
    return acc;
}

}  // namespace density
}  // namespace cubiclocal
