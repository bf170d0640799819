#ifndef CUBICLOCAL_FORMS_HPP
#define CUBICLOCAL_FORMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cubiclocal/gf.hpp"
#include "cubiclocal/rat.hpp"

namespace cubiclocal {
namespace ff {

// Monomials x_i x_j x_k with 0 <= i <= j <= k <= n in lexicographic order;
// a cubic form in n+1 variables is its coefficient vector in this order.
struct MonomialIndex {
    int n;
    std::vector<std::array<int, 3>> triples;

    static const MonomialIndex& get(int n);  // cached per n
    size_t size() const { return triples.size(); }
    size_t index_of(int i, int j, int k) const;  // requires i <= j <= k
};

struct CubicForm {
    int n;
    uint32_t p;
    std::vector<uint8_t> coeffs;  // values in [0, p), MonomialIndex order

    bool is_zero() const;
    auto operator<=>(const CubicForm&) const = default;
};

// Convenience constructor from (triple, value) terms; unlisted monomials are 0.
CubicForm make_form(int n, uint32_t p,
                    const std::vector<std::pair<std::array<int, 3>, uint32_t>>& terms);

struct TypeCounts {
    Int total;
    std::array<Int, 4> by_type;  // index = factorization type, 0..3
};

// Enumerates and classifies all cubic forms over F_p in n+1 variables that
// factor as the product of Galois conjugates of a linear form over F_{p^3}.
// Built once per (n, p) and cached; all queries afterwards are lookups.
class FormOracle {
public:
    // Shared, lazily-built instance. Throws if the enumeration of p^{3(n+1)}
    // linear forms exceeds `budget` candidates.
    static const FormOracle& get(int n, uint32_t p, uint64_t budget = kDefaultBudget);

    static constexpr uint64_t kDefaultBudget = 1ull << 24;

    int n() const { return n_; }
    uint32_t p() const { return p_; }
    const FieldTower& tower() const { return tower_; }

    // Canonical representatives (first nonzero coefficient scaled to 1) of
    // the type-i forms; the full set has (p-1) scalings of each.
    const std::set<std::vector<uint8_t>>& representatives(int i) const;

    std::vector<CubicForm> type_forms(int i) const;  // all N_{n,i} forms
    int classify(const CubicForm& f) const;          // 0..3; throws on the zero form
    TypeCounts count(std::optional<int> condition) const;

private:
    FormOracle(int n, uint32_t p, uint64_t budget);
    int n_;
    uint32_t p_;
    FieldTower tower_;
    std::array<std::set<std::vector<uint8_t>>, 4> reps_;  // [1..3] used

    std::vector<uint8_t> canonical(const CubicForm& f) const;
};

// Free-function entry points over the shared per-(n, p) oracle.
std::vector<CubicForm> generate_type_forms(int n, uint32_t p, int i);
int classify_form(const CubicForm& f);
// Condition (1)/(2)/(3): the restriction of f to its first j variables has no
// nontrivial zero over F_p. Throws if j > n + 1.
bool check_condition(const CubicForm& f, int j);
TypeCounts count_types(int n, uint32_t p, std::optional<int> condition = {});

// Number of F_q-points of the Grassmannian Gr(r, k) (the Gaussian binomial).
Int grassmannian_points(int r, int k, const Int& q);

}  // namespace ff
}  // namespace cubiclocal

#endif
