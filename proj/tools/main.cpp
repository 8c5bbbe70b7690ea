#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mod3/checker.hpp"
#include "mod3/expr.hpp"
#include "mod3/json_io.hpp"
#include "mod3/spaces.hpp"
#include "mod3/steenrod.hpp"

namespace {

// exit codes: 0 = witness / verdict true / pass, 1 = none / false / fail,
// 2 = usage or input error
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::vector<mod3::GeneratorId> resolve_names(const std::string& csv,
                                             const mod3::SpacePresentation& P) {
    std::vector<mod3::GeneratorId> ids;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string name = csv.substr(start, comma == std::string::npos ? comma : comma - start);
        // trim
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
            name.erase(name.begin());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        if (!name.empty()) {
            auto id = P.find(name);
            if (!id)
                throw mod3::ParseError("unknown generator '" + name + "'");
            ids.push_back(*id);
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return ids;
}

int run_check(int circles, int bz3_count, int n, int max_degree, const std::string& alphas_csv,
              const std::string& zeta_expr, bool json) {
    int cap = max_degree > 0 ? max_degree : n + 6;
    mod3::SpacePresentation P = mod3::product_space(circles, bz3_count, cap);

    if (alphas_csv.empty() != zeta_expr.empty()) {
        std::cerr << "error: --alphas and --zeta must be given together\n";
        return kExitUsage;
    }

    if (!alphas_csv.empty()) {
        std::vector<mod3::GeneratorId> alphas = resolve_names(alphas_csv, P);
        mod3::Element zeta = mod3::parse_element(zeta_expr, P);
        mod3::WitnessReport report = mod3::check_condition(P, n, alphas, zeta);
        if (json)
            std::cout << mod3::render_json(mod3::witness_report_json(report, P));
        else
            std::cout << mod3::explain(report, P);
        return report.verdict ? kExitTrue : kExitFalse;
    }

    std::optional<mod3::WitnessReport> found = mod3::search_witness(P, n);
    if (found) {
        if (json)
            std::cout << mod3::render_json(mod3::witness_report_json(*found, P));
        else
            std::cout << mod3::explain(*found, P);
        return kExitTrue;
    }
    if (json)
        std::cout << mod3::render_json(mod3::no_witness_json(P, n));
    else
        std::cout << "no witness found (cohomological criterion)\n";
    return kExitFalse;
}

int run_dims(int circles, int bz3_count, int max_degree, bool json) {
    mod3::SpacePresentation P =
        mod3::product_space(circles, bz3_count, std::max(max_degree, 2));
    if (json) {
        std::cout << mod3::render_json(mod3::dims_json(P, max_degree));
        return kExitTrue;
    }
    std::vector<long long> series =
        mod3::hilbert_coefficients(circles + bz3_count, bz3_count, max_degree);
    std::cout << "degree  basis  series\n";
    for (int k = 0; k <= max_degree; ++k)
        std::cout << k << "\t" << mod3::basis(P, k).size() << "\t" << series[k] << "\n";
    return kExitTrue;
}

int run_axioms(int circles, int bz3_count, int max_degree, int trials, std::uint64_t seed) {
    mod3::SpacePresentation P =
        mod3::product_space(circles, bz3_count, std::max(max_degree, 2));
    mod3::AxiomReport report = mod3::verify_axioms(P, max_degree, trials, seed);
    if (report.passed) {
        std::cout << "axioms: PASS (" << report.checks << " identities, seed " << report.seed
                  << ")\n";
        return kExitTrue;
    }
    std::cout << "axioms: FAIL at degree " << report.degree << "\n"
              << "  axiom:   " << report.failed_axiom << "\n"
              << "  witness: " << report.witness << "\n";
    return kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mod-3 cohomology engine for products of circles and BZ/3:\n"
                 "graded-commutative arithmetic, the operations beta, P1, Q1, and a\n"
                 "checker for the cup-product nonvanishing condition\n"
                 "  rho(alpha_1) ... rho(alpha_(n-2)) beta Q1 zeta != 0  in degree n+6."};
    app.require_subcommand(1);

    int circles = 3, bz3_count = 2, n = 5, max_degree = 0, axiom_degree = 12, trials = 100;
    std::uint64_t seed = mod3::kDefaultAxiomSeed;
    std::string alphas_csv, zeta_expr;
    bool json = false;

    CLI::App* check = app.add_subcommand(
        "check", "evaluate the condition for given classes, or search for a witness");
    check->add_option("--circles", circles, "number of circle factors")->required();
    check->add_option("--bz3", bz3_count, "number of BZ/3 factors")->required();
    check->add_option("--n", n, "dimension parameter; the condition lives in degree n+6")
        ->required();
    check->add_option("--alphas", alphas_csv,
                      "comma-separated integral degree-1 generators (with --zeta)");
    check->add_option("--zeta", zeta_expr, "degree-2 class, e.g. \"x1*x2\" (with --alphas)");
    check->add_option("--max-degree", max_degree, "degree cap (default n+6)");
    check->add_flag("--json", json, "machine-readable report");

    CLI::App* dims = app.add_subcommand("dims", "basis dimensions vs. the Hilbert series");
    dims->add_option("--circles", circles, "number of circle factors")->required();
    dims->add_option("--bz3", bz3_count, "number of BZ/3 factors")->required();
    dims->add_option("--max-degree", max_degree, "largest degree to tabulate")->required();
    dims->add_flag("--json", json, "machine-readable table");

    CLI::App* axioms = app.add_subcommand("axioms", "run the operation axiom suite");
    axioms->add_option("--circles", circles, "number of circle factors");
    axioms->add_option("--bz3", bz3_count, "number of BZ/3 factors");
    axioms->add_option("--max-degree", axiom_degree, "check identities up to this degree");
    axioms->add_option("--trials", trials, "random elements per degree");
    axioms->add_option("--seed", seed, "seed of the deterministic generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return run_check(circles, bz3_count, n, max_degree, alphas_csv, zeta_expr, json);
        if (dims->parsed())
            return run_dims(circles, bz3_count, max_degree, json);
        return run_axioms(circles, bz3_count, axiom_degree, trials, seed);
    } catch (const mod3::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
