#include "cubiclocal/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace cubiclocal {
namespace euler {

namespace {
std::mutex memo_mutex;
std::vector<Rat> memo;  // B_0, B_1, ... (odd indices > 1 are zero)
}  // namespace

Rat bernoulli(long k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("Bernoulli index must be even and >= 0");
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (memo.empty()) {
        memo.push_back(Rat(1));
        memo.push_back(make_rat(-1, 2));
    }
    while (static_cast<long>(memo.size()) <= k) {
        long m = static_cast<long>(memo.size());
        // B_m = -1/(m+1) * sum_{j<m} binom(m+1, j) B_j
        Rat sum(0);
        Int binomial = 1;  // binom(m+1, 0)
        for (long j = 0; j < m; ++j) {
            if (sgn(memo[j]) != 0) sum += Rat(binomial) * memo[j];
            binomial = binomial * (m + 1 - j) / (j + 1);
        }
        memo.push_back(-sum / Rat(m + 1));
    }
    return memo[static_cast<size_t>(k)];
}

}  // namespace euler
}  // namespace cubiclocal
