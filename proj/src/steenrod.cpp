#include "mod3/steenrod.hpp"

#include <random>

namespace mod3 {

const char* op_name(OperationKind k) {
    switch (k) {
        case OperationKind::Beta: return "beta";
        case OperationKind::P1: return "P1";
        case OperationKind::Q1: return "Q1";
    }
    return "?";
}

namespace {

// One factor of a canonical monomial: an exterior generator (exponent 1) or
// a power block g^exponent of a polynomial generator.
struct Factor {
    GeneratorId id;
    std::uint32_t exponent;
    int degree;  // of the generator, not the block
};

std::vector<Factor> factor_list(const Monomial& m) {
    std::vector<Factor> fs;
    fs.reserve(m.exterior.size() + m.powers.size());
    for (GeneratorId g : m.exterior)
        fs.push_back({g, 1, 1});
    for (const auto& [g, exp] : m.powers)
        fs.push_back({g, exp, 2});
    return fs;
}

Monomial monomial_from_factors(const std::vector<Factor>& fs, std::size_t from, std::size_t to) {
    Monomial m;
    for (std::size_t i = from; i < to; ++i) {
        if (fs[i].exponent == 0)
            continue;
        if (fs[i].degree == 1)
            m.exterior.push_back(fs[i].id);
        else
            m.powers.emplace_back(fs[i].id, fs[i].exponent);
    }
    return m;
}

// Extends generator images to a derivation of the given parity:
//   D(f1...fs) = sum_t (-1)^(parity * deg(f1...f_{t-1})) f1...f_{t-1} D(f_t) f_{t+1}...fs
// with D(g^k) = k g^(k-1) D(g) on power blocks.
template <typename ImageFn>
Element derive_monomial(const Monomial& m, F3 coeff, const SpacePresentation& P,
                        const ImageFn& image, bool odd_op) {
    Element out;
    std::vector<Factor> fs = factor_list(m);
    int degree_before = 0;
    for (std::size_t t = 0; t < fs.size(); ++t) {
        const Element& img = image(fs[t].id);
        if (!img.is_zero()) {
            F3 c = coeff * F3(static_cast<long long>(fs[t].exponent));
            if (odd_op && degree_before % 2 != 0)
                c = -c;
            if (!c.is_zero()) {
                std::vector<Factor> prefix_fs(fs.begin(), fs.begin() + t);
                if (fs[t].exponent > 1)
                    prefix_fs.push_back({fs[t].id, fs[t].exponent - 1, fs[t].degree});
                Monomial prefix = monomial_from_factors(prefix_fs, 0, prefix_fs.size());
                Monomial suffix = monomial_from_factors(fs, t + 1, fs.size());
                out = add(out, mul(mul(Element::monomial(prefix, c), img, P),
                                   Element::monomial(suffix), P));
            }
        }
        degree_before += fs[t].degree * static_cast<int>(fs[t].exponent);
    }
    return out;
}

template <typename ImageFn>
Element derive(const Element& a, const SpacePresentation& P, const ImageFn& image, bool odd_op) {
    check_element(a, P);
    Element out;
    for (const auto& [m, c] : a.terms)
        out = add(out, derive_monomial(m, c, P, image, odd_op));
    return out;
}

}  // namespace

Element beta(const Element& a, const SpacePresentation& P) {
    return derive(a, P, [&](GeneratorId g) -> const Element& { return P.generator(g).beta_image; },
                  /*odd_op=*/true);
}

Element p1(const Element& a, const SpacePresentation& P) {
    return derive(a, P, [&](GeneratorId g) -> const Element& { return P.generator(g).p1_image; },
                  /*odd_op=*/false);
}

Element q1(const Element& a, const SpacePresentation& P) {
    return sub(p1(beta(a, P), P), beta(p1(a, P), P));
}

Element q1_derivation(const Element& a, const SpacePresentation& P) {
    check_element(a, P);
    std::vector<Element> images(P.size());
    for (GeneratorId g = 0; g < P.size(); ++g)
        images[g] = q1(generator_element(P, g), P);
    return derive(a, P, [&](GeneratorId g) -> const Element& { return images[g]; },
                  /*odd_op=*/true);
}

Element apply_op(OperationKind k, const Element& a, const SpacePresentation& P) {
    switch (k) {
        case OperationKind::Beta: return beta(a, P);
        case OperationKind::P1: return p1(a, P);
        case OperationKind::Q1: return q1(a, P);
    }
    return Element::zero();
}

namespace {

struct AxiomChecker {
    const SpacePresentation& P;
    AxiomReport& report;

    bool expect_equal(const Element& lhs, const Element& rhs, const char* axiom,
                      const Element& input, int degree) {
        ++report.checks;
        if (lhs == rhs)
            return true;
        report.passed = false;
        report.failed_axiom = axiom;
        report.witness = "input " + to_string(input, P) + ": lhs = " + to_string(lhs, P) +
                         ", rhs = " + to_string(rhs, P);
        report.degree = degree;
        return false;
    }

    bool nilpotency(const Element& a, int degree) {
        if (!expect_equal(beta(beta(a, P), P), Element::zero(), "beta o beta = 0", a, degree))
            return false;
        if (!expect_equal(q1(q1(a, P), P), Element::zero(), "Q1 o Q1 = 0", a, degree))
            return false;
        return expect_equal(q1(a, P), q1_derivation(a, P),
                            "commutator Q1 = derivation Q1", a, degree);
    }

    bool leibniz(const Element& u, const Element& v, int degree) {
        Element uv = mul(u, v, P);
        // odd operations pick up (-1)^|u| on the second summand
        bool u_odd = !u.is_zero() && u.degree() % 2 != 0;
        F3 sgn = u_odd ? -F3::one() : F3::one();
        Element lhs_b = beta(uv, P);
        Element rhs_b = add(mul(beta(u, P), v, P), scale(sgn, mul(u, beta(v, P), P)));
        if (!expect_equal(lhs_b, rhs_b, "Leibniz rule for beta", uv, degree))
            return false;
        Element lhs_p = p1(uv, P);
        Element rhs_p = add(mul(p1(u, P), v, P), mul(u, p1(v, P), P));
        if (!expect_equal(lhs_p, rhs_p, "Leibniz rule for P1", uv, degree))
            return false;
        Element lhs_q = q1(uv, P);
        Element rhs_q = add(mul(q1(u, P), v, P), scale(sgn, mul(u, q1(v, P), P)));
        return expect_equal(lhs_q, rhs_q, "Leibniz rule for Q1", uv, degree);
    }

    bool frobenius(const Element& u, int degree) {
        return expect_equal(p1(u, P), mul(u, mul(u, u, P), P),
                            "P1(u) = u^3 in degree 2", u, degree);
    }
};

}  // namespace

AxiomReport verify_axioms(const SpacePresentation& P, int max_degree, int trials,
                          std::uint64_t seed) {
    AxiomReport report;
    report.seed = seed;
    if (max_degree > P.degree_cap)
        throw OutOfRangeError("verify_axioms degree " + std::to_string(max_degree) +
                              " exceeds the presentation cap " + std::to_string(P.degree_cap));
    AxiomChecker checker{P, report};

    std::vector<std::vector<Monomial>> bases(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d)
        bases[d] = basis(P, d);

    for (int d = 0; d <= max_degree; ++d)
        for (const Monomial& m : bases[d])
            if (!checker.nilpotency(Element::monomial(m), d))
                return report;

    for (int d1 = 0; d1 <= max_degree; ++d1)
        for (int d2 = 0; d1 + d2 <= max_degree; ++d2)
            for (const Monomial& u : bases[d1])
                for (const Monomial& v : bases[d2])
                    if (!checker.leibniz(Element::monomial(u), Element::monomial(v), d1 + d2))
                        return report;

    if (max_degree >= 2)
        for (const Monomial& u : bases[2])
            if (!checker.frobenius(Element::monomial(u), 2))
                return report;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> split(0, max_degree > 0 ? max_degree : 0);
    for (int d = 0; d <= max_degree; ++d) {
        for (int t = 0; t < trials; ++t) {
            Element r = random_element(P, d, rng);
            if (!checker.nilpotency(r, d))
                return report;
            int d1 = split(rng) % (d + 1);
            Element u = random_element(P, d1, rng);
            Element v = random_element(P, d - d1, rng);
            if (!u.is_zero() && !checker.leibniz(u, v, d))
                return report;
            if (d == 2 && !checker.frobenius(r, 2))
                return report;
        }
    }
    return report;
}

}  // namespace mod3
