// Command-line front end: symbolic local densities, brute-force oracle
// verification, certified Euler products, and the combined report tables.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubiclocal/certify.hpp"
#include "cubiclocal/decimal.hpp"
#include "cubiclocal/density.hpp"
#include "cubiclocal/forms.hpp"
#include "cubiclocal/golden.hpp"
#include "cubiclocal/padic.hpp"
#include "cubiclocal/xi.hpp"

namespace {

using nlohmann::json;
using namespace cubiclocal;

enum class Format { text, json_fmt, latex };

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

json int_to_json(const Int& v) {
    if (v.fits_slong_p() && std::abs(v.get_si()) <= (1l << 53)) return v.get_si();
    return v.get_str();
}

json coeffs_json(const ZPoly& p) {
    json arr = json::array();
    for (const auto& c : p) arr.push_back(int_to_json(c));
    return arr;
}

std::string poly_latex(const ZPoly& p) {
    std::string s = zpoly_str(p, "p");
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '*')
            continue;
        else if (s[i] == '^') {
            out += "^{";
            size_t j = i + 1;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) out += s[j++];
            out += "}";
            i = j - 1;
        } else {
            out += s[i];
        }
    }
    return out;
}

// Table 6 style reference rows (n, prime cutoff A).
const std::vector<std::pair<int, std::vector<uint64_t>>> kReportCutoffs = {
    {2, {61, 12919}}, {3, {11, 503}}, {4, {5, 179}},  {5, {3, 17}},
    {6, {3, 19}},     {7, {3, 7}},    {8, {3, 5}},
};

int cmd_solve(int n, Format fmt) {
    if (n >= 9) {
        if (fmt == Format::json_fmt) {
            json j{{"n", n}, {"g", json::array()}, {"h", {1}}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "1\n";
        }
        return kExitOk;
    }
    RatFunc rho = density::rho_local(n);
    RatFunc one_minus = RatFunc(1) - rho;
    const ZPoly& g = one_minus.znum();
    const ZPoly& h = one_minus.zden();
    std::optional<std::pair<long, long>> asymp;
    if (n >= 2) asymp = density::asymptotic_params(n);
    switch (fmt) {
        case Format::json_fmt: {
            json j{{"n", n}, {"g", coeffs_json(g)}, {"h", coeffs_json(h)}};
            if (asymp) {
                j["gamma"] = asymp->first;
                j["delta"] = asymp->second;
            }
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::latex:
            std::cout << "\\rho_{3," << n << "}(p) = 1 - \\frac{" << poly_latex(g) << "}{"
                      << poly_latex(h) << "}\n";
            break;
        case Format::text:
            std::cout << "g_" << n << " = " << zpoly_str(g, "p") << "\n";
            std::cout << "h_" << n << " = " << zpoly_str(h, "p") << "\n";
            if (asymp)
                std::cout << "gamma = " << asymp->first << ", delta = " << asymp->second << "\n";
            break;
    }
    return kExitOk;
}

int cmd_verify_golden(std::optional<int> n, Format fmt) {
    std::vector<int> ns;
    if (n)
        ns.push_back(*n);
    else
        for (int i = 1; i <= 8; ++i) ns.push_back(i);
    bool all_ok = true;
    json report = json::array();
    for (int i : ns) {
        bool ok = density::golden_check(i);
        all_ok = all_ok && ok;
        if (fmt == Format::json_fmt)
            report.push_back({{"n", i}, {"ok", ok}});
        else
            std::cout << "n=" << i << ": " << (ok ? "OK" : "MISMATCH") << "\n";
    }
    if (fmt == Format::json_fmt) std::cout << report.dump() << "\n";
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_oracle(int n, uint32_t q, std::optional<int> cond, Format fmt) {
    ff::TypeCounts counts = ff::count_types(n, q, cond);

    // Formula comparison: counts must equal xi * total exactly.
    const density::XiTable& xi = density::xi_table(n, cond);
    bool match = true;
    for (int i = 0; i <= 3; ++i) {
        Rat expected = xi.values[i].eval(Rat(static_cast<unsigned long>(q))) * Rat(counts.total);
        if (expected != Rat(counts.by_type[i])) match = false;
    }

    if (fmt == Format::json_fmt) {
        json j;
        j["n"] = n;
        j["q"] = q;
        j["condition"] = cond ? json(*cond) : json(nullptr);
        j["total"] = int_to_json(counts.total);
        j["counts"] = {{"0", int_to_json(counts.by_type[0])},
                       {"1", int_to_json(counts.by_type[1])},
                       {"2", int_to_json(counts.by_type[2])},
                       {"3", int_to_json(counts.by_type[3])}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << n << " q=" << q << " condition=" << (cond ? std::to_string(*cond) : "-")
                  << ": total=" << counts.total;
        for (int i = 0; i <= 3; ++i) std::cout << " N" << i << "=" << counts.by_type[i];
        std::cout << "\nformula agreement: " << (match ? "OK" : "MISMATCH") << "\n";
    }
    if (!match) std::cerr << "counts disagree with the closed forms at q = " << q << "\n";
    return match ? kExitOk : kExitMismatch;
}

json certificate_json(const euler::CertifiedValue& cv) {
    const auto& c = cv.certificate;
    json j;
    j["n"] = c.n;
    j["A"] = c.A;
    j["M"] = c.params.M;
    j["I"] = c.params.I;
    j["B"] = rat_to_string(c.B);
    j["error_bound"] = decimal_upper_bound_string(c.error_bound);
    j["digits"] = c.digits;
    j["value"] = cv.decimal;
    return j;
}

int cmd_rho(int n, long digits, uint64_t a_max, const euler::TailBoundParams& params, Format fmt) {
    if (n >= 9) {
        std::cout << "1\n";
        return kExitOk;
    }
    euler::CertifiedValue cv = euler::rho_global(n, digits, a_max, params);
    if (fmt == Format::json_fmt) {
        std::cout << certificate_json(cv).dump() << "\n";
    } else {
        std::cout << "rho_" << n << " ~ " << cv.decimal << "\n";
        std::cout << "primes included: p <= " << cv.certificate.A << "\n";
        std::cout << "certified error <= " << decimal_upper_bound_string(cv.certificate.error_bound)
                  << " (10^-" << cv.certificate.digits << ")\n";
    }
    return kExitOk;
}

int cmd_zeta_tail(const std::string& a_str, long s, const euler::TailBoundParams& params,
                  Format fmt) {
    Rat A = rat_from_string(a_str);
    Rat bound = euler::zeta_tail_upper(A, s, params);
    // Render an upper decimal approximation so the printed value is still a bound.
    Int scale = pow_int(Int(10), 30);
    Int up;
    mpz_cdiv_q(up.get_mpz_t(), Int(bound.get_num() * scale).get_mpz_t(),
               bound.get_den().get_mpz_t());
    Rat shown = make_rat(up, scale);
    if (fmt == Format::json_fmt) {
        json j{{"A", a_str}, {"s", s},           {"M", params.M},
               {"I", params.I}, {"bound", rat_to_string(bound)}, {"bound_decimal", decimal_string(shown, 30)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "zeta_{>" << a_str << "}(" << s << ") <= " << decimal_string(shown, 30) << "\n";
    }
    return kExitOk;
}

int cmd_sample(uint32_t p, uint64_t samples, int precision, uint64_t seed, Format fmt) {
    ff::SolubilityEstimate est = ff::padic_binary_cubic_sample(p, samples, precision, seed);
    Rat estimate = make_rat(Int(est.soluble), Int(est.samples));
    Rat target = density::rho_local(1).eval(Rat(p));
    if (fmt == Format::json_fmt) {
        json j;
        j["p"] = est.p;
        j["samples"] = est.samples;
        j["precision"] = est.precision;
        j["seed"] = est.seed;
        j["soluble"] = est.soluble;
        j["insoluble"] = est.insoluble;
        j["undecided"] = est.undecided;
        j["estimate"] = decimal_string(estimate, 6);
        j["exact"] = rat_to_string(target);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "p=" << p << " samples=" << samples << " precision=" << precision
                  << " seed=" << seed << "\n";
        std::cout << "soluble=" << est.soluble << " insoluble=" << est.insoluble
                  << " undecided=" << est.undecided << "\n";
        std::cout << "estimate=" << decimal_string(estimate, 6) << " exact rho_1(" << p
                  << ")=" << rat_to_string(target) << " ~ " << decimal_string(target, 6) << "\n";
    }
    return kExitOk;
}

int cmd_tables(Format fmt) {
    json out{{"asymptotics", json::array()},
             {"truncations", json::array()},
             {"densities", json::array()}};
    bool text = fmt != Format::json_fmt;

    if (text) std::cout << "Asymptotics (n, gamma, delta):\n";
    for (int n = 2; n <= 8; ++n) {
        auto [g, d] = density::asymptotic_params(n);
        if (text)
            std::cout << "  " << n << "  " << g << "  " << d << "\n";
        else
            out["asymptotics"].push_back({{"n", n}, {"gamma", g}, {"delta", d}});
    }

    if (text) std::cout << "\nTruncation accuracy (n, A, 1 - prod_{p<=A} rho_n(p), certified D):\n";
    for (const auto& [n, cutoffs] : kReportCutoffs) {
        for (uint64_t A : cutoffs) {
            auto [B, err] = euler::truncation_error_bound(n, Rat(static_cast<unsigned long>(A)));
            Rat prod = euler::truncated_product(n, A);
            std::string complement = scientific_string(Rat(1) - prod, 4);
            long digits = certified_digits(err);
            if (text)
                std::cout << "  " << n << "  " << A << "  " << complement << "  " << digits << "\n";
            else
                out["truncations"].push_back(
                    {{"n", n}, {"A", A}, {"one_minus_product", complement}, {"digits", digits}});
        }
    }

    if (text) std::cout << "\nGlobal densities (n, 1 - rho_n(p) asymptotic, rho_3,n):\n";
    for (const auto& [n, cutoffs] : kReportCutoffs) {
        if (n == 2) continue;  // the n = 2 product over all p is a plane-cubic density, not rho_3,n
        auto [g, d] = density::asymptotic_params(n);
        Rat prod = euler::truncated_product(n, cutoffs[0]);
        std::string asym = "1/(" + std::to_string(g) + " p^" + std::to_string(d) + ")";
        std::string rho_str = n == 3 ? decimal_string(prod, 6) + " (conjectural)"
                                     : "1 - " + scientific_string(Rat(1) - prod, 4);
        if (text)
            std::cout << "  " << n << "  " << asym << "  " << rho_str << "\n";
        else
            out["densities"].push_back({{"n", n}, {"asymptotic", asym}, {"rho", rho_str}});
    }
    if (!text) std::cout << out.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local and global densities of soluble p-adic cubic hypersurfaces"};
    app.require_subcommand(1);

    std::string format_str = "text";
    app.add_option("--format", format_str, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir, "directory for solved-density records");

    int n = 1;
    uint32_t q = 2;
    std::optional<int> cond;
    long digits = 10;
    uint64_t a_max = 20000;
    euler::TailBoundParams params;
    uint64_t samples = 100000, seed = 1;
    int precision = 40;
    std::string a_str = "1";
    long s = 2;
    bool all = false;

    auto* solve = app.add_subcommand("solve", "solve the lifting-probability system for one n");
    solve->add_option("--n", n, "dimension parameter")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-golden", "check solved densities against the reference polynomials");
    auto* vopt = verify->add_option("--n", n, "single n in 1..8")->check(CLI::Range(1, 8));
    verify->add_flag("--all", all, "check all n in 1..8");

    auto* oracle = app.add_subcommand("oracle", "brute-force factorization-type counts vs closed forms");
    oracle->add_option("--n", n, "dimension parameter")->required()->check(CLI::Range(0, 6));
    oracle->add_option("--q", q, "prime field size")->required()->check(CLI::Range(2u, 13u));
    oracle->add_option("--cond", cond, "condition (1), (2) or (3)")->check(CLI::Range(1, 3));

    auto* rho = app.add_subcommand("rho", "certified global density");
    rho->add_option("--n", n, "dimension parameter")->required()->check(CLI::Range(2, 1000));
    rho->add_option("--digits", digits, "certified decimal digits")->required()->check(CLI::PositiveNumber);
    rho->add_option("--max-A", a_max, "largest prime cutoff to try");
    rho->add_option("--M", params.M, "Euler-Maclaurin partial-sum length")->check(CLI::PositiveNumber);
    rho->add_option("--I", params.I, "Euler-Maclaurin correction order (even)")->check(CLI::PositiveNumber);

    auto* zeta = app.add_subcommand("zeta-tail", "certified upper bound on the zeta Euler-product tail");
    zeta->add_option("--A", a_str, "tail cutoff (rational)")->required();
    zeta->add_option("--s", s, "integer exponent >= 2")->required()->check(CLI::Range(2l, 100000l));
    zeta->add_option("--M", params.M, "partial-sum length")->check(CLI::PositiveNumber);
    zeta->add_option("--I", params.I, "correction order (even)")->check(CLI::PositiveNumber);

    auto* sample = app.add_subcommand("sample-padic", "Monte Carlo solubility of p-adic binary cubics");
    sample->add_option("--p", q, "prime")->required()->check(CLI::Range(2u, 97u));
    sample->add_option("--samples", samples, "sample count")->required()->check(CLI::PositiveNumber);
    sample->add_option("--precision", precision, "p-adic precision K")->check(CLI::Range(10, 1000));
    sample->add_option("--seed", seed, "RNG seed");

    auto* tables = app.add_subcommand("tables", "regenerate the asymptotics/accuracy/density report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Format fmt = format_str == "json" ? Format::json_fmt
               : format_str == "latex" ? Format::latex
                                       : Format::text;
    if (!cache_dir.empty()) {
        density::set_cache_directory(std::filesystem::path(cache_dir));
    } else if (const char* env = std::getenv("CUBICLOCAL_CACHE_DIR")) {
        if (*env) density::set_cache_directory(std::filesystem::path(env));
    }

    try {
        if (solve->parsed()) return cmd_solve(n, fmt);
        if (verify->parsed()) {
            if (!all && vopt->count() == 0) {
                std::cerr << "verify-golden needs --n or --all\n";
                return kExitUsage;
            }
            return cmd_verify_golden(all ? std::nullopt : std::optional<int>(n), fmt);
        }
        if (oracle->parsed()) return cmd_oracle(n, q, cond, fmt);
        if (rho->parsed()) return cmd_rho(n, digits, a_max, params, fmt);
        if (zeta->parsed()) return cmd_zeta_tail(a_str, s, params, fmt);
        if (sample->parsed()) return cmd_sample(q, samples, precision, seed, fmt);
        if (tables->parsed()) return cmd_tables(fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
