#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mod3/algebra.hpp"

namespace mod3 {

// Outcome of one condition check: the inputs, the cup product
// rho(alpha_1) ... rho(alpha_{n-2}) * beta(Q1(zeta)), and its verdict.
struct WitnessReport {
    int n = 0;
    std::vector<GeneratorId> alphas;
    Element zeta;
    Element product_class;                  // degree n+6 when non-zero
    bool verdict = false;                   // product_class != 0
    std::optional<Monomial> pairing_witness;  // first non-zero term when verdict holds
    std::vector<std::string> warnings;
};

// Evaluates the nonvanishing condition
//   rho(alpha_1) u ... u rho(alpha_{n-2}) u beta Q1 zeta != 0
// in degree n+6. alphas must be n-2 distinct integral degree-1 generators;
// zeta must be homogeneous of degree 2 (or zero). Conclusions outside
// 5 <= n <= 8 carry a warning; the algebra is checked for any n >= 2.
WitnessReport check_condition(const SpacePresentation& P, int n,
                              const std::vector<GeneratorId>& alphas, const Element& zeta);

// Sweeps zeta over the degree-2 monomial basis (outer loop, in basis order)
// and alphas over (n-2)-subsets of the integral degree-1 generators
// (lexicographic); returns the first true report, or nullopt.
//
// The restriction to basis monomials and generator subsets loses nothing:
// zeta |-> product_class is F3-linear, so a non-zero value on some element
// forces one on a basis monomial, and a product of integral degree-1 classes
// expands over products of distinct integral generators.
std::optional<WitnessReport> search_witness(const SpacePresentation& P, int n);

// Renders the check as text: the cup-product chain, and for a positive
// verdict the Kronecker descent against the dual of the pairing witness,
// ending with the induced statement in degree-2 homology.
std::string explain(const WitnessReport& report, const SpacePresentation& P);

}  // namespace mod3
