#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mod3/algebra.hpp"
#include "mod3/spaces.hpp"

using namespace mod3;

namespace {

// Independent dimension oracle: coefficient of t^k in (1+t)^e * (1-t^2)^(-m),
// via binomial sums rather than the library's series multiplication.
long long binom(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

long long series_dim(int e, int m, int k) {
    long long total = 0;
    for (int j = 0; 2 * j <= k; ++j)
        total += binom(e, k - 2 * j) * binom(m - 1 + j, j);
    return total;
}

Element gen(const SpacePresentation& P, const char* name) {
    auto id = P.find(name);
    REQUIRE(id.has_value());
    return generator_element(P, *id);
}

}  // namespace

TEST_CASE("F3 arithmetic") {
    CHECK(F3(1) + F3(2) == F3(0));
    CHECK(F3(2) * F3(2) == F3(1));
    CHECK(-F3(1) == F3(2));
    CHECK(F3(-1) == F3(2));
    CHECK(F3(300) == F3(0));
    CHECK(F3(2).inverse() * F3(2) == F3(1));
}

TEST_CASE("monomial order: degree first, then exterior, then powers") {
    Monomial unit = Monomial::unit();
    Monomial a0 = Monomial::exterior_gen(0);
    Monomial y = Monomial::poly_power(4, 1);
    Monomial y3 = Monomial::poly_power(4, 3);
    CHECK(unit < a0);
    CHECK(a0 < y);        // degree 1 < 2
    CHECK(y < y3);        // degree 2 < 6
    CHECK(unit.degree() == 0);
    CHECK(y3.degree() == 6);

    // same degree: the empty exterior list is a prefix of any other, so pure
    // power monomials sort before exterior products
    Monomial y1{{}, {{4, 1}}};
    Monomial a01{{0, 1}, {}};
    CHECK(y1.degree() == a01.degree());
    CHECK(y1 < a01);
    // same generator set: lower first exponent sorts first
    Monomial y1y2cubed{{}, {{4, 1}, {6, 3}}};
    Monomial y1cubedy2{{}, {{4, 3}, {6, 1}}};
    CHECK(y1y2cubed.degree() == y1cubedy2.degree());
    CHECK(y1y2cubed < y1cubedy2);
}

TEST_CASE("element canonical form") {
    SpacePresentation P = b_gamma(5);
    Element x1 = gen(P, "x1");

    CHECK(add(x1, scale(F3(2), x1)) == Element::zero());
    CHECK(add(x1, Element::zero()) == x1);
    CHECK(scale(F3(2), scale(F3(2), x1)) == x1);

    // normalization is idempotent
    Monomial m = Monomial::exterior_gen(0);
    std::vector<std::pair<Monomial, long long>> raw = {{m, 5}, {m, 4}, {m, -9}};
    Element once = Element::from_terms(raw);
    std::vector<std::pair<Monomial, long long>> again;
    for (const auto& [mm, c] : once.terms)
        again.emplace_back(mm, c.value());
    CHECK(Element::from_terms(again) == once);
    CHECK(once == Element::zero());  // 5 + 4 - 9 = 0
}

TEST_CASE("products: exterior squares, Koszul signs, central squares") {
    SpacePresentation P = b_gamma(5);
    Element a1 = gen(P, "a1"), a2 = gen(P, "a2");
    Element x1 = gen(P, "x1"), y1 = gen(P, "y1");

    CHECK(mul(x1, x1, P) == Element::zero());
    CHECK(mul(a1, a2, P) == scale(F3(-1), mul(a2, a1, P)));
    CHECK(mul(y1, y1, P) == Element::monomial(Monomial::poly_power(*P.find("y1"), 2)));
    // degree-2 generators are central
    CHECK(mul(y1, a1, P) == mul(a1, y1, P));
}

TEST_CASE("merge sign matches a hand-counted transposition") {
    SpacePresentation P = b_gamma(5);
    Element a1 = gen(P, "a1"), a2 = gen(P, "a2"), a3 = gen(P, "a3");
    // (a1 a3) * a2 = - a1 a2 a3
    Element lhs = mul(mul(a1, a3, P), a2, P);
    Element rhs = scale(F3(-1), mul(mul(a1, a2, P), a3, P));
    CHECK(lhs == rhs);
}

TEST_CASE("basis of the n=5 presentation in low degrees") {
    SpacePresentation P = b_gamma(5);
    CHECK(basis(P, 0).size() == 1);
    CHECK(basis(P, 0)[0].is_unit());

    // degree 1: exactly the five degree-1 generators a1,a2,a3,x1,x2
    std::vector<Monomial> deg1 = basis(P, 1);
    std::vector<Monomial> expected;
    for (const char* name : {"a1", "a2", "a3", "x1", "x2"})
        expected.push_back(Monomial::exterior_gen(*P.find(name)));
    CHECK(deg1 == expected);

    CHECK(basis(P, 2).size() == 12);
    CHECK_THROWS_AS(basis(P, P.degree_cap + 1), OutOfRangeError);
    CHECK_THROWS_AS(basis(P, -1), OutOfRangeError);
}

TEST_CASE("dimension oracle: enumeration vs series vs frozen values") {
    SpacePresentation P = b_gamma(5);  // cap 11
    const long long frozen[] = {1, 5, 12, 20, 28, 36, 44, 52, 60, 68, 76, 84};
    std::vector<long long> lib = hilbert_coefficients(5, 2, 11);
    for (int k = 0; k <= 11; ++k) {
        CAPTURE(k);
        long long enumerated = static_cast<long long>(basis(P, k).size());
        CHECK(enumerated == series_dim(5, 2, k));
        CHECK(enumerated == lib[k]);
        CHECK(enumerated == frozen[k]);
    }
}

TEST_CASE("basis enumeration is deterministic and sorted") {
    SpacePresentation P = b_gamma(5);
    for (int k = 0; k <= P.degree_cap; ++k) {
        std::vector<Monomial> b1 = basis(P, k), b2 = basis(P, k);
        CHECK(b1 == b2);
        CHECK(std::is_sorted(b1.begin(), b1.end()));
    }
}

TEST_CASE("associativity and graded commutativity on random elements") {
    SpacePresentation P = b_gamma(5);
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        int d1 = deg(rng), d2 = deg(rng), d3 = deg(rng);
        Element a = random_element(P, d1, rng);
        Element b = random_element(P, d2, rng);
        Element c = random_element(P, d3, rng);
        CHECK(mul(mul(a, b, P), c, P) == mul(a, mul(b, c, P), P));
        Element ab = mul(a, b, P);
        Element ba = mul(b, a, P);
        bool both_odd = d1 % 2 == 1 && d2 % 2 == 1;
        CHECK(ab == (both_odd ? scale(F3(-1), ba) : ba));
    }
}

TEST_CASE("truncation consistency across caps") {
    SpacePresentation big = b_gamma(5, 11);
    SpacePresentation small = b_gamma(5, 7);
    std::mt19937_64 rng(987);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int d1 = deg(rng), d2 = deg(rng);
        Element a = random_element(big, d1, rng);
        Element b = random_element(big, d2, rng);
        CHECK(truncate(mul(a, b, big), 7) == mul(a, b, small));
    }
}

TEST_CASE("presentation mismatch is detected") {
    SpacePresentation P = b_gamma(5);
    Element foreign = Element::monomial(Monomial::exterior_gen(99));
    CHECK_THROWS_AS(mul(foreign, foreign, P), PresentationMismatchError);
    // a degree-2 generator used in an exterior slot
    Element wrong_slot = Element::monomial(Monomial::exterior_gen(*P.find("y1")));
    CHECK_THROWS_AS(mul(wrong_slot, wrong_slot, P), PresentationMismatchError);
}

TEST_CASE("degree of elements") {
    SpacePresentation P = b_gamma(5);
    Element x1 = gen(P, "x1"), y1 = gen(P, "y1");
    CHECK(x1.degree() == 1);
    CHECK(y1.degree() == 2);
    CHECK(mul(x1, y1, P).degree() == 3);
    CHECK_THROWS_AS(Element::zero().degree(), DegreeMismatchError);
    CHECK_THROWS_AS(add(x1, y1).degree(), DegreeMismatchError);
    CHECK(add(x1, y1).is_homogeneous() == false);
}

TEST_CASE("rendering") {
    SpacePresentation P = b_gamma(5);
    Element x1 = gen(P, "x1"), x2 = gen(P, "x2");
    CHECK(to_string(Element::zero(), P) == "0");
    CHECK(to_string(Element::unit(), P) == "1");
    CHECK(to_string(scale(F3(2), Element::unit()), P) == "2");
    CHECK(to_string(mul(x1, x2, P), P) == "x1*x2");
    Element y13 = Element::monomial(Monomial::poly_power(*P.find("y1"), 3));
    CHECK(to_string(y13, P) == "y1^3");
    CHECK(to_string(scale(F3(2), y13), P) == "2*y1^3");
}
