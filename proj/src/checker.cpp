#include "mod3/checker.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mod3/homology.hpp"
#include "mod3/steenrod.hpp"

namespace mod3 {

namespace {

const char* kRangeWarning = "algebraic condition only: the geometric conclusion requires 5 <= n <= 8";

Element alpha_product(const SpacePresentation& P, const std::vector<GeneratorId>& alphas) {
    Element acc = Element::unit();
    for (GeneratorId a : alphas)
        acc = mul(acc, generator_element(P, a), P);
    return acc;
}

void validate_alphas(const SpacePresentation& P, int n, const std::vector<GeneratorId>& alphas) {
    if (static_cast<int>(alphas.size()) != n - 2)
        throw InvalidWitnessError("expected " + std::to_string(n - 2) + " alpha classes, got " +
                                  std::to_string(alphas.size()));
    std::set<GeneratorId> seen;
    for (GeneratorId a : alphas) {
        const GeneratorSpec& g = P.generator(a);
        if (g.degree != 1)
            throw InvalidWitnessError("alpha class '" + g.name + "' is not of degree 1");
        if (!g.integral_lift)
            throw InvalidWitnessError("alpha class '" + g.name + "' has no integral lift");
        if (!seen.insert(a).second)
            throw InvalidWitnessError("alpha class '" + g.name + "' repeats");
    }
}

}  // namespace

WitnessReport check_condition(const SpacePresentation& P, int n,
                              const std::vector<GeneratorId>& alphas, const Element& zeta) {
    if (n < 2)
        throw InvalidArgumentError("condition needs n >= 2, got " + std::to_string(n));
    if (P.degree_cap < n + 6)
        throw OutOfRangeError("degree cap " + std::to_string(P.degree_cap) +
                              " too small; the condition lives in degree " + std::to_string(n + 6));
    validate_alphas(P, n, alphas);
    check_element(zeta, P);
    if (!zeta.is_zero() && (!zeta.is_homogeneous() || zeta.degree() != 2))
        throw DegreeMismatchError("zeta must be homogeneous of degree 2");

    WitnessReport report;
    report.n = n;
    report.alphas = alphas;
    report.zeta = zeta;
    report.product_class = mul(alpha_product(P, alphas), beta(q1(zeta, P), P), P);
    report.verdict = !report.product_class.is_zero();
    if (report.verdict)
        report.pairing_witness = report.product_class.terms.begin()->first;
    if (n < 5 || n > 8)
        report.warnings.push_back(kRangeWarning);
    return report;
}

std::optional<WitnessReport> search_witness(const SpacePresentation& P, int n) {
    if (n < 2)
        throw InvalidArgumentError("condition needs n >= 2, got " + std::to_string(n));
    std::vector<GeneratorId> eligible;
    for (const GeneratorSpec& g : P.generators)
        if (g.degree == 1 && g.integral_lift)
            eligible.push_back(g.id);
    int needed = n - 2;
    if (static_cast<int>(eligible.size()) < needed)
        throw NotEnoughClassesError("need " + std::to_string(needed) +
                                    " integral degree-1 classes, presentation has " +
                                    std::to_string(eligible.size()));

    // (n-2)-subsets of the eligible generators, in lexicographic id order.
    std::vector<std::vector<GeneratorId>> subsets;
    std::vector<GeneratorId> current;
    auto enumerate = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            subsets.push_back(current);
            return;
        }
        for (std::size_t i = from; i + left <= eligible.size(); ++i) {
            current.push_back(eligible[i]);
            self(self, i + 1, left - 1);
            current.pop_back();
        }
    };
    enumerate(enumerate, 0, needed);

    for (const Monomial& zm : basis(P, 2)) {
        Element zeta = Element::monomial(zm);
        // all subset products pair against the same beta(Q1(zeta))
        if (beta(q1(zeta, P), P).is_zero())
            continue;
        for (const std::vector<GeneratorId>& subset : subsets) {
            WitnessReport report = check_condition(P, n, subset, zeta);
            if (report.verdict)
                return report;
        }
    }
    return std::nullopt;
}

namespace {

std::string names(const SpacePresentation& P, const std::vector<GeneratorId>& ids,
                  const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            s += sep;
        s += P.generator(ids[i]).name;
    }
    return s;
}

}  // namespace

std::string explain(const WitnessReport& report, const SpacePresentation& P) {
    std::ostringstream os;
    os << "space: " << P.circle_factors << " circle factor(s) x " << P.bz3_factors
       << " BZ/3 factor(s), degree cap " << P.degree_cap << "\n";
    os << "n = " << report.n << ", alphas = {" << names(P, report.alphas, ", ")
       << "}, zeta = " << to_string(report.zeta, P) << "\n";
    if (P.bz3_factors > 0)
        os << "(y_j denotes the Bockstein image beta(x_j))\n";
    for (const std::string& w : report.warnings)
        os << "warning: " << w << "\n";

    Element q1z = q1(report.zeta, P);
    Element bq1z = beta(q1z, P);
    std::string alpha_names = names(P, report.alphas, "*");
    std::string prefix = alpha_names.empty() ? "" : alpha_names + " * ";

    os << "\ncup-product chain:\n";
    os << "  zeta                = " << to_string(report.zeta, P) << "\n";
    if (report.zeta.is_zero() || q1z.is_zero()) {
        os << "  Q1(zeta)            = 0   <-- first vanishing step\n";
        os << "\nverdict: ZERO -- the condition fails for this input\n";
        return os.str();
    }
    os << "  Q1(zeta)            = " << to_string(q1z, P) << "\n";
    if (bq1z.is_zero()) {
        os << "  beta(Q1(zeta))      = 0   <-- first vanishing step\n";
        os << "\nverdict: ZERO -- the condition fails for this input\n";
        return os.str();
    }
    os << "  beta(Q1(zeta))      = " << to_string(bq1z, P) << "\n";
    if (!report.verdict) {
        os << "  " << prefix << "beta(Q1(zeta)) = 0   <-- first vanishing step\n";
        os << "\nverdict: ZERO -- the condition fails for this input\n";
        return os.str();
    }
    os << "  " << prefix << "beta(Q1(zeta)) = " << to_string(report.product_class, P)
       << "   [degree " << report.product_class.degree() << ", non-zero]\n";

    os << "\nverdict: NONZERO -- the cohomological condition holds\n";

    // Kronecker descent against the dual of the pairing witness, dualizing
    // one operation per step. Values may flip sign across steps; each one
    // must stay non-zero.
    const Monomial& w = *report.pairing_witness;
    int top = report.n + 6;
    HomologyClass y = dual_class(P, w);
    HomologyClass by = apply(transpose_op(OperationKind::Beta, top, P), y, top - 1);
    HomologyClass qby = apply(transpose_op(OperationKind::Q1, top - 1, P), by, top - 6);
    HomologyClass pby = apply(transpose_op(OperationKind::P1, top - 1, P), by, top - 5);
    HomologyClass bpby = apply(transpose_op(OperationKind::Beta, top - 5, P), pby, top - 6);
    HomologyClass capped = bpby;
    for (GeneratorId a : report.alphas)
        capped = cap(generator_element(P, a), capped, P);

    Element a_prod = alpha_product(P, report.alphas);
    F3 v0 = kronecker(report.product_class, y, P);
    F3 v1 = kronecker(mul(a_prod, q1z, P), by, P);
    F3 v2 = kronecker(mul(a_prod, report.zeta, P), qby, P);
    F3 v3 = kronecker(mul(a_prod, report.zeta, P), bpby, P);
    F3 v4 = kronecker(report.zeta, capped, P);

    // alphas are capped innermost-first, so the display lists them reversed
    std::string cap_chain;
    for (auto it = report.alphas.rbegin(); it != report.alphas.rend(); ++it)
        cap_chain += P.generator(*it).name + std::string(" cap ");
    cap_chain += "delta P1 rho (z)";

    os << "\nKronecker descent against y = dual(" << to_string(w, P) << "):\n";
    os << "  <" << prefix << "beta(Q1(zeta)), y>            = " << int(v0.value()) << "\n";
    os << "  <" << prefix << "Q1(zeta), beta*(y)>           = " << int(v1.value())
       << "   [beta vanishes on integral classes]\n";
    os << "  <" << prefix << "zeta, Q1*(beta*(y))>          = " << int(v2.value())
       << "   [Q1 vanishes on degree-1 classes]\n";
    os << "  <" << prefix << "zeta, beta*(P1*(beta*(y)))>   = " << int(v3.value())
       << "   [beta o beta = 0]\n";
    os << "  <zeta, rho(" << cap_chain << ")>  = " << int(v4.value())
       << "   [beta = rho o delta, z = delta(y)]\n";
    bool descent_ok = !v0.is_zero() && !v1.is_zero() && !v2.is_zero() && !v3.is_zero() &&
                      !v4.is_zero() && qby == bpby;
    os << (descent_ok ? "descent check: all pairings non-zero\n"
                      : "descent check: FAILED (internal inconsistency)\n");
    os << "\nhomological conclusion: with z = delta(dual(" << to_string(w, P)
       << ")), an integral class of degree " << top - 1 << ",\n"
       << (report.alphas.empty()
               ? "the class delta P1 rho (z) is non-zero in degree-2 homology.\n"
               : "the iterated cap product of the alphas against delta P1 rho (z) is non-zero "
                 "in degree-2 homology.\n");
    return os.str();
}

}  // namespace mod3
