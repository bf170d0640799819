#include "cubiclocal/density.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cubiclocal/cache.hpp"
#include "cubiclocal/golden.hpp"

namespace cubiclocal {
namespace density {

namespace {

std::mutex state_mutex;
std::optional<std::filesystem::path> cache_dir;
std::map<int, ProbabilityTable> table_memo;
std::map<int, RatFunc> rho_memo;

// gamma/delta reference pairs for n = 2..8.
constexpr std::array<std::pair<long, long>, 7> kAsymptotics = {{
    {3, 3}, {3, 10}, {9, 22}, {9, 43}, {9, 78}, {27, 129}, {27, 201},
}};

std::pair<long, long> asymptotics_of(const RatFunc& rho) {
    RatFunc one_minus = RatFunc(1) - rho;
    if (one_minus.is_zero()) throw std::domain_error("1 - rho vanishes; no asymptotic");
    long delta = zp_deg(one_minus.zden()) - zp_deg(one_minus.znum());
    const Int& ln = zp_lc(one_minus.znum());
    const Int& ld = zp_lc(one_minus.zden());
    if (!mpz_divisible_p(ld.get_mpz_t(), ln.get_mpz_t()))
        throw std::runtime_error("leading-coefficient ratio is not an integer");
    Int gamma;
    mpz_divexact(gamma.get_mpz_t(), ld.get_mpz_t(), ln.get_mpz_t());
    if (sgn(gamma) <= 0 || !gamma.fits_slong_p() || delta <= 0)
        throw std::runtime_error("asymptotic parameters out of range");
    return {gamma.get_si(), delta};
}

RatFunc rho_from_record(const DensityRecord& rec) {
    return RatFunc(1) - RatFunc::from_zpoly(rec.g, rec.h);
}

// Solve (or reload) n in 1..9 and memoize; callers hold no lock.
const ProbabilityTable& table_for(int n) {
    {
        std::lock_guard<std::mutex> lock(state_mutex);
        auto it = table_memo.find(n);
        if (it != table_memo.end()) return it->second;
    }
    LinearSystem sys = build_system(n);
    ProbabilityTable table = solve_staged(sys);
    std::lock_guard<std::mutex> lock(state_mutex);
    return table_memo.emplace(n, std::move(table)).first->second;
}

}  // namespace

void set_cache_directory(std::optional<std::filesystem::path> dir) {
    std::lock_guard<std::mutex> lock(state_mutex);
    cache_dir = std::move(dir);
}

std::optional<std::filesystem::path> cache_directory() {
    std::lock_guard<std::mutex> lock(state_mutex);
    return cache_dir;
}

const ProbabilityTable& probability_table(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("probability table exists for n in 1..9");
    return table_for(n);
}

RatFunc rho_local(int n) {
    if (n <= 0) throw std::invalid_argument("rho_local needs n >= 1");
    if (n > 9) return RatFunc(1);

    std::optional<std::filesystem::path> dir;
    {
        std::lock_guard<std::mutex> lock(state_mutex);
        auto it = rho_memo.find(n);
        if (it != rho_memo.end()) return it->second;
        dir = cache_dir;
    }

    // A cached record is advisory: for n <= 8 it must pass the golden check
    // or it is recomputed.
    if (dir && n <= 8) {
        if (auto rec = load_density_record(*dir, n)) {
            RatFunc rho = rho_from_record(*rec);
            if (golden_check(n, rho)) {
                std::lock_guard<std::mutex> lock(state_mutex);
                return rho_memo.emplace(n, std::move(rho)).first->second;
            }
        }
    }

    RatFunc rho = table_for(n).at(density::rho());
    if (dir && n <= 8) {
        RatFunc one_minus = RatFunc(1) - rho;
        DensityRecord rec{n, one_minus.znum(), one_minus.zden(), std::nullopt};
        if (n >= 2) rec.asymp = asymptotics_of(rho);
        store_density_record(*dir, rec);
    }
    std::lock_guard<std::mutex> lock(state_mutex);
    return rho_memo.emplace(n, rho).first->second;
}

std::pair<long, long> asymptotic_params(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("asymptotic parameters exist for n in 2..8");
    auto computed = asymptotics_of(rho_local(n));
    auto expected = kAsymptotics[static_cast<size_t>(n - 2)];
    if (computed != expected)
        throw std::runtime_error("asymptotic parameters disagree with the reference table");
    return computed;
}

}  // namespace density
}  // namespace cubiclocal
