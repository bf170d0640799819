#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef CUBICLOCAL_CLI_PATH
#error "CUBICLOCAL_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CUBICLOCAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("solve n >= 9 prints 1") {
    auto r = run_cli("solve --n 9");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
    auto rj = run_cli("--format json solve --n 12");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["g"].empty());
    CHECK(j["h"] == nlohmann::json::array({1}));
}

TEST_CASE("solve n = 1 emits the reduced fraction") {
    auto r = run_cli("--format json solve --n 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 1);
    CHECK(j["g"] == nlohmann::json::array({1, 0, 2, 0, 1}));            // (p^2+1)^2
    CHECK(j["h"] == nlohmann::json::array({3, 3, 3, 3, 3}));            // 3(p^4+...+1)
    CHECK(!j.contains("gamma"));
}

TEST_CASE("verify-golden single n") {
    auto r = run_cli("verify-golden --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n=2: OK\n");
    CHECK(run_cli("verify-golden").exit_code == 2);
}

TEST_CASE("verify-golden all emits eight OK lines") {
    auto r = run_cli("verify-golden --all");
    CHECK(r.exit_code == 0);
    std::string expected;
    for (int n = 1; n <= 8; ++n) expected += "n=" + std::to_string(n) + ": OK\n";
    CHECK(r.out == expected);
}

TEST_CASE("oracle JSON schema and agreement") {
    auto r = run_cli("--format json oracle --n 2 --q 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["q"] == 2);
    CHECK(j["condition"].is_null());
    CHECK(j["total"] == 1023);
    CHECK(j["counts"]["1"] == 7);
    CHECK(j["counts"]["2"] == 14);
    CHECK(j["counts"]["3"] == 8);
    CHECK(j["counts"]["0"] == 994);

    auto rc = run_cli("--format json oracle --n 1 --q 3 --cond 2");
    CHECK(rc.exit_code == 0);
    auto jc = nlohmann::json::parse(rc.out);
    CHECK(jc["condition"] == 2);
}

TEST_CASE("rho subcommand") {
    auto r = run_cli("rho --n 9 --digits 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    auto rj = run_cli("--format json rho --n 5 --digits 12");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["n"] == 5);
    CHECK(j["M"] == 1000);
    CHECK(j["I"] == 4);
    CHECK(j["digits"].get<long>() >= 12);
    CHECK(j["B"].get<std::string>().find('/') != std::string::npos);
    std::string v = j["value"].get<std::string>();
    CHECK(v.substr(0, 8) == "0.999999");
}

TEST_CASE("zeta-tail") {
    auto r = run_cli("zeta-tail --A 1 --s 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.6449340668") != std::string::npos);
}

TEST_CASE("sample-padic determinism") {
    std::string args = "--format json sample-padic --p 3 --samples 500 --precision 12 --seed 7";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical for identical configuration
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["p"] == 3);
    CHECK(j["soluble"].get<long>() + j["insoluble"].get<long>() + j["undecided"].get<long>() == 500);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("oracle --n 2").exit_code == 2);            // missing --q
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("rho --n 5").exit_code == 2);               // missing --digits
    CHECK(run_cli("sample-padic --p 9 --samples 10").exit_code == 2);
}

TEST_CASE("cache transparency") {
    std::string dir = "/tmp/cubiclocal_cli_cache_test";
    std::string rm = "rm -rf " + dir;
    REQUIRE(std::system(rm.c_str()) == 0);
    std::string args = "--cache-dir " + dir + " --format json solve --n 3";
    auto cold = run_cli(args);
    auto warm = run_cli(args);
    CHECK(cold.exit_code == 0);
    CHECK(cold.out == warm.out);

    // The record lands on disk and round-trips through the declared schema.
    std::ifstream rec(dir + "/rho_3.json");
    REQUIRE(rec.good());
    auto j = nlohmann::json::parse(rec);
    CHECK(j["n"] == 3);
    CHECK(j["g"].is_array());
    CHECK(j["h"].is_array());
    CHECK(j["gamma"] == 3);
    CHECK(j["delta"] == 10);

    // The environment variable names the same cache directory.
    std::string env_run = "CUBICLOCAL_CACHE_DIR=" + dir + " " + std::string(CUBICLOCAL_CLI_PATH) +
                          " --format json solve --n 3";
    FILE* pipe = popen(env_run.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(out == cold.out);
    REQUIRE(std::system(rm.c_str()) == 0);
}
