#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mod3/errors.hpp"
#include "mod3/fp3.hpp"

namespace mod3 {

using GeneratorId = std::uint32_t;

// A canonical monomial in a graded-commutative algebra with degree-1
// (exterior) and degree-2 (polynomial) generators:
//   - `exterior` lists degree-1 generator ids, strictly increasing;
//   - `powers` maps degree-2 generator ids (strictly increasing) to
//     exponents >= 1.
// The empty monomial is the unit.
struct Monomial {
    std::vector<GeneratorId> exterior;
    std::vector<std::pair<GeneratorId, std::uint32_t>> powers;

    int degree() const;
    bool is_unit() const { return exterior.empty() && powers.empty(); }

    static Monomial unit() { return {}; }
    static Monomial exterior_gen(GeneratorId g) { return Monomial{{g}, {}}; }
    static Monomial poly_power(GeneratorId g, std::uint32_t exp) { return Monomial{{}, {{g, exp}}}; }

    bool operator==(const Monomial& o) const = default;
    // Total order: degree first, then exterior ids, then (id, exponent) pairs.
    std::strong_ordering operator<=>(const Monomial& o) const;
};

// An F3-linear combination of monomials in canonical form: no zero
// coefficients, so structural equality is algebra equality.
struct Element {
    std::map<Monomial, F3> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous() const;
    // Degree of a non-zero homogeneous element; throws DegreeMismatchError otherwise.
    int degree() const;

    // Adds c * m, folding coefficients and dropping the term if it cancels.
    void add_term(const Monomial& m, F3 c);

    static Element zero() { return {}; }
    static Element unit() { return monomial(Monomial::unit()); }
    static Element monomial(const Monomial& m, F3 c = F3::one());
    // Normalizing constructor: folds duplicate monomials, reduces mod 3,
    // drops zeros.
    static Element from_terms(const std::vector<std::pair<Monomial, long long>>& raw);

    bool operator==(const Element& o) const = default;
};

struct GeneratorSpec {
    GeneratorId id = 0;
    std::string name;
    int degree = 1;       // 1 or 2
    Element beta_image;   // homogeneous of degree `degree + 1`, or zero
    Element p1_image;     // homogeneous of degree `degree + 4`, or zero
    bool integral_lift = false;
};

// A finitely generated graded-commutative F3-algebra, truncated above
// `degree_cap`. Immutable once built; all operations are pure.
struct SpacePresentation {
    std::vector<GeneratorSpec> generators;
    int degree_cap = 0;
    int circle_factors = 0;
    int bz3_factors = 0;

    const GeneratorSpec& generator(GeneratorId g) const;
    std::optional<GeneratorId> find(std::string_view name) const;
    std::size_t size() const { return generators.size(); }

    // Shape invariants: degrees in {1,2}, images homogeneous of the right
    // degree and referencing only generators of this presentation,
    // integral_lift forcing a zero Bockstein image. Throws on violation.
    void validate() const;
};

// Throws PresentationMismatchError unless every monomial of `a` uses ids of
// P with the right degree class.
void check_element(const Element& a, const SpacePresentation& P);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(F3 c, const Element& a);

// Graded-commutative product with Koszul signs; repeated exterior factors
// vanish; terms above P.degree_cap are dropped.
Element mul(const Element& a, const Element& b, const SpacePresentation& P);

// Drops all terms of degree > cap.
Element truncate(const Element& a, int cap);

// Convenience: the generator g as an Element.
Element generator_element(const SpacePresentation& P, GeneratorId g);

// All canonical monomials of degree exactly k, sorted in the monomial order.
// Throws OutOfRangeError unless 0 <= k <= P.degree_cap.
std::vector<Monomial> basis(const SpacePresentation& P, int k);

// Coefficients of (1+t)^deg1_count * (1-t^2)^(-deg2_count) up to t^max_degree,
// computed by power-series arithmetic (independent of basis enumeration).
std::vector<long long> hilbert_coefficients(int deg1_count, int deg2_count, int max_degree);

// Dense pseudo-random homogeneous element of the given degree.
Element random_element(const SpacePresentation& P, int degree, std::mt19937_64& rng);

std::string to_string(const Monomial& m, const SpacePresentation& P);
std::string to_string(const Element& a, const SpacePresentation& P);

}  // namespace mod3
