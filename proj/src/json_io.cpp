#include "mod3/json_io.hpp"

namespace mod3 {

namespace {

ordered_json space_json(const SpacePresentation& P) {
    return ordered_json{{"circles", P.circle_factors},
                        {"bz3", P.bz3_factors},
                        {"cap", P.degree_cap}};
}

}  // namespace

ordered_json witness_report_json(const WitnessReport& report, const SpacePresentation& P) {
    ordered_json j;
    j["space"] = space_json(P);
    j["n"] = report.n;
    ordered_json alphas = ordered_json::array();
    for (GeneratorId a : report.alphas)
        alphas.push_back(P.generator(a).name);
    j["alphas"] = alphas;
    j["zeta"] = to_string(report.zeta, P);
    j["verdict"] = report.verdict;
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : report.product_class.terms)
        terms.push_back(ordered_json{{"monomial", to_string(m, P)},
                                     {"coeff", static_cast<int>(c.value())}});
    j["product_class"] = terms;
    j["pairing_witness"] = report.pairing_witness ? to_string(*report.pairing_witness, P) : "";
    j["warnings"] = report.warnings;
    return j;
}

ordered_json no_witness_json(const SpacePresentation& P, int n) {
    ordered_json j;
    j["space"] = space_json(P);
    j["n"] = n;
    j["alphas"] = ordered_json::array();
    j["zeta"] = "";
    j["verdict"] = false;
    j["product_class"] = ordered_json::array();
    j["pairing_witness"] = "";
    j["warnings"] = ordered_json::array({"no witness found (cohomological criterion)"});
    return j;
}

ordered_json dims_json(const SpacePresentation& P, int max_degree) {
    int deg1 = 0, deg2 = 0;
    for (const auto& g : P.generators)
        (g.degree == 1 ? deg1 : deg2)++;
    std::vector<long long> series = hilbert_coefficients(deg1, deg2, max_degree);
    ordered_json j;
    j["space"] = space_json(P);
    ordered_json rows = ordered_json::array();
    for (int k = 0; k <= max_degree; ++k)
        rows.push_back(ordered_json{{"degree", k},
                                    {"basis", basis(P, k).size()},
                                    {"series", series[k]}});
    j["dims"] = rows;
    return j;
}

std::string render_json(const ordered_json& j) {
    return j.dump(2) + "\n";
}

}  // namespace mod3
