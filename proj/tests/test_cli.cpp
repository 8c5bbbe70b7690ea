#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "mod3/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MOD3COH_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("check exit codes for the three reference invocations") {
    CHECK(run_cli("check --circles 3 --bz3 2 --n 5").exit_code == 0);
    CHECK(run_cli("check --circles 4 --bz3 1 --n 5").exit_code == 1);

    RunResult below_range = run_cli("check --circles 3 --bz3 2 --n 4");
    CHECK(below_range.exit_code == 0);
    CHECK(below_range.out.find("algebraic condition only") != std::string::npos);
}

TEST_CASE("explicit alphas and zeta run the single check") {
    RunResult r = run_cli("check --circles 3 --bz3 2 --n 5 --alphas a1,a2,a3 --zeta x1*x2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("NONZERO") != std::string::npos);

    RunResult zero = run_cli("check --circles 3 --bz3 2 --n 5 --alphas a1,a2,a3 --zeta y1");
    CHECK(zero.exit_code == 1);
    CHECK(zero.out.find("first vanishing step") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("check --circles 3 --bz3 2 --n 5 --alphas a1,a2,a3 --zeta 'x1*'").exit_code == 2);
    CHECK(run_cli("check --circles 3 --bz3 2 --n 5 --alphas a1,a2,a3").exit_code == 2);
    CHECK(run_cli("check --circles 3 --bz3 2 --n 5 --zeta x1*x2 --alphas a1,a9,a3").exit_code == 2);
    CHECK(run_cli("check --circles 3 --bz3 2").exit_code == 2);  // missing --n
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("JSON reports round-trip byte-identically") {
    for (const char* args : {"check --circles 3 --bz3 2 --n 5 --json",
                             "check --circles 4 --bz3 1 --n 5 --json",
                             "check --circles 3 --bz3 2 --n 4 --json",
                             "check --circles 3 --bz3 2 --n 5 --alphas a1,a2,a3 --zeta y1 --json",
                             "dims --circles 3 --bz3 2 --max-degree 6 --json"}) {
        CAPTURE(args);
        RunResult r = run_cli(args);
        mod3::ordered_json parsed = mod3::ordered_json::parse(r.out);
        CHECK(mod3::render_json(parsed) == r.out);
    }
}

TEST_CASE("text and JSON modes agree on verdict and witness") {
    RunResult text = run_cli("check --circles 3 --bz3 2 --n 5");
    RunResult json = run_cli("check --circles 3 --bz3 2 --n 5 --json");
    CHECK(text.exit_code == json.exit_code);

    mod3::ordered_json j = mod3::ordered_json::parse(json.out);
    CHECK(j["verdict"] == true);
    CHECK(j["zeta"] == "x1*x2");
    CHECK(j["n"] == 5);
    CHECK(j["space"]["circles"] == 3);
    CHECK(j["space"]["bz3"] == 2);
    CHECK(j["alphas"] == mod3::ordered_json::array({"a1", "a2", "a3"}));
    CHECK(text.out.find("zeta = x1*x2") != std::string::npos);

    std::string witness = j["pairing_witness"].get<std::string>();
    CHECK_FALSE(witness.empty());
    CHECK(text.out.find(witness) != std::string::npos);

    // the product class is the frozen degree-11 element
    mod3::ordered_json expected_product = mod3::ordered_json::array(
        {{{"monomial", "a1*a2*a3*y1*y2^3"}, {"coeff", 2}},
         {{"monomial", "a1*a2*a3*y1^3*y2"}, {"coeff", 1}}});
    CHECK(j["product_class"] == expected_product);
}

TEST_CASE("no-witness JSON carries the criterion warning") {
    RunResult r = run_cli("check --circles 4 --bz3 1 --n 5 --json");
    CHECK(r.exit_code == 1);
    mod3::ordered_json j = mod3::ordered_json::parse(r.out);
    CHECK(j["verdict"] == false);
    CHECK(j["product_class"].empty());
    CHECK(j["pairing_witness"] == "");
    REQUIRE(j["warnings"].size() == 1);
    CHECK(j["warnings"][0].get<std::string>().find("no witness found") != std::string::npos);
}

TEST_CASE("dims tables match the reference values") {
    struct Case {
        const char* args;
        std::vector<long long> expected;
    };
    for (const Case& c : {Case{"dims --circles 0 --bz3 1 --max-degree 5 --json",
                               {1, 1, 1, 1, 1, 1}},
                          Case{"dims --circles 2 --bz3 0 --max-degree 3 --json", {1, 2, 1, 0}},
                          Case{"dims --circles 3 --bz3 2 --max-degree 2 --json", {1, 5, 12}}}) {
        CAPTURE(c.args);
        RunResult r = run_cli(c.args);
        CHECK(r.exit_code == 0);
        mod3::ordered_json j = mod3::ordered_json::parse(r.out);
        REQUIRE(j["dims"].size() == c.expected.size());
        for (std::size_t k = 0; k < c.expected.size(); ++k) {
            CHECK(j["dims"][k]["degree"] == static_cast<long long>(k));
            CHECK(j["dims"][k]["basis"] == c.expected[k]);
            CHECK(j["dims"][k]["series"] == c.expected[k]);
        }
    }
}

TEST_CASE("axioms subcommand") {
    RunResult r = run_cli("axioms --circles 3 --bz3 2 --max-degree 8 --trials 3 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("seed 11") != std::string::npos);

    RunResult vacuous = run_cli("axioms --circles 1 --bz3 0 --max-degree 2 --trials 1");
    CHECK(vacuous.exit_code == 0);

    RunResult degree_zero = run_cli("axioms --circles 3 --bz3 2 --max-degree 0 --trials 1");
    CHECK(degree_zero.exit_code == 0);
    CHECK(degree_zero.out.find("PASS") != std::string::npos);
}

TEST_CASE("dims text table lists degree, basis and series columns") {
    RunResult r = run_cli("dims --circles 3 --bz3 2 --max-degree 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("degree") != std::string::npos);
    CHECK(r.out.find("12") != std::string::npos);
    CHECK(run_cli("dims --circles 1 --bz3 1 --max-degree -1").exit_code == 2);
}
