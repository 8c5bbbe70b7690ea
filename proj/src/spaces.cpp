#include "mod3/spaces.hpp"

namespace mod3 {

namespace {

GeneratorSpec circle_generator(GeneratorId id, std::string name) {
    GeneratorSpec g;
    g.id = id;
    g.name = std::move(name);
    g.degree = 1;
    g.integral_lift = true;
    return g;
}

// Appends the (x, y) pair of one BZ/3 factor starting at id `first`.
void append_bz3_pair(std::vector<GeneratorSpec>& gens, GeneratorId first,
                     const std::string& x_name, const std::string& y_name) {
    GeneratorSpec x;
    x.id = first;
    x.name = x_name;
    x.degree = 1;
    x.beta_image = Element::monomial(Monomial::poly_power(first + 1, 1));

    GeneratorSpec y;
    y.id = first + 1;
    y.name = y_name;
    y.degree = 2;
    y.p1_image = Element::monomial(Monomial::poly_power(first + 1, 3));

    gens.push_back(std::move(x));
    gens.push_back(std::move(y));
}

Element reindex(const Element& a, GeneratorId offset) {
    Element out;
    for (const auto& [m, c] : a.terms) {
        Monomial shifted;
        for (GeneratorId g : m.exterior)
            shifted.exterior.push_back(g + offset);
        for (const auto& [g, exp] : m.powers)
            shifted.powers.emplace_back(g + offset, exp);
        out.add_term(shifted, c);
    }
    return out;
}

}  // namespace

SpacePresentation circle(int degree_cap) {
    SpacePresentation P;
    P.generators.push_back(circle_generator(0, "a"));
    P.degree_cap = degree_cap;
    P.circle_factors = 1;
    P.validate();
    return P;
}

SpacePresentation bz3(int degree_cap) {
    SpacePresentation P;
    append_bz3_pair(P.generators, 0, "x", "y");
    P.degree_cap = degree_cap;
    P.bz3_factors = 1;
    P.validate();
    return P;
}

SpacePresentation product(const SpacePresentation& A, const SpacePresentation& B, int degree_cap) {
    SpacePresentation P;
    P.degree_cap = degree_cap;
    P.circle_factors = A.circle_factors + B.circle_factors;
    P.bz3_factors = A.bz3_factors + B.bz3_factors;
    P.generators = A.generators;
    GeneratorId offset = static_cast<GeneratorId>(A.generators.size());
    for (const GeneratorSpec& g : B.generators) {
        GeneratorSpec shifted = g;
        shifted.id = g.id + offset;
        shifted.beta_image = reindex(g.beta_image, offset);
        shifted.p1_image = reindex(g.p1_image, offset);
        P.generators.push_back(std::move(shifted));
    }
    P.validate();
    return P;
}

SpacePresentation product_space(int circles, int bz3_factors, int degree_cap) {
    if (circles < 0 || bz3_factors < 0)
        throw InvalidArgumentError("factor counts must be non-negative");
    SpacePresentation P;
    for (int i = 0; i < circles; ++i)
        P.generators.push_back(
            circle_generator(static_cast<GeneratorId>(i), "a" + std::to_string(i + 1)));
    for (int j = 0; j < bz3_factors; ++j) {
        GeneratorId first = static_cast<GeneratorId>(circles + 2 * j);
        append_bz3_pair(P.generators, first, "x" + std::to_string(j + 1),
                        "y" + std::to_string(j + 1));
    }
    P.degree_cap = degree_cap;
    P.circle_factors = circles;
    P.bz3_factors = bz3_factors;
    P.validate();
    return P;
}

SpacePresentation b_gamma(int n, int degree_cap) {
    if (n < 2)
        throw InvalidArgumentError("b_gamma requires n >= 2, got " + std::to_string(n));
    return product_space(n - 2, 2, degree_cap > 0 ? degree_cap : n + 6);
}

}  // namespace mod3
