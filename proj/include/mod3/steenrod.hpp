#pragma once

#include <cstdint>
#include <string>

#include "mod3/algebra.hpp"

namespace mod3 {

enum class OperationKind { Beta, P1, Q1 };

constexpr int degree_shift(OperationKind k) {
    switch (k) {
        case OperationKind::Beta: return 1;
        case OperationKind::P1: return 4;
        case OperationKind::Q1: return 5;
    }
    return 0;
}

// Parity of the operation in the graded Leibniz rule.
constexpr bool is_odd(OperationKind k) {
    return k != OperationKind::P1;
}

const char* op_name(OperationKind k);

// Mod-3 Bockstein, extended from the generator images as an odd derivation:
// beta(uv) = beta(u) v + (-1)^|u| u beta(v).
Element beta(const Element& a, const SpacePresentation& P);

// First Steenrod power, extended as an even derivation.
Element p1(const Element& a, const SpacePresentation& P);

// The commutator p1(beta(a)) - beta(p1(a)).
Element q1(const Element& a, const SpacePresentation& P);

// Q1 extended as an odd derivation from its values on generators; must agree
// with the commutator (checked by verify_axioms).
Element q1_derivation(const Element& a, const SpacePresentation& P);

Element apply_op(OperationKind k, const Element& a, const SpacePresentation& P);

struct AxiomReport {
    bool passed = true;
    std::string failed_axiom;  // empty when passed
    std::string witness;       // offending element(s), printed
    int degree = -1;           // degree at which the failure was found
    std::uint64_t seed = 0;
    std::size_t checks = 0;    // number of identities verified
};

inline constexpr std::uint64_t kDefaultAxiomSeed = 0x5eed0003;

// Checks, on every basis monomial of degree <= max_degree and on `trials`
// seeded pseudo-random elements per degree:
//   beta^2 = 0, Q1^2 = 0, commutator Q1 = derivation Q1,
//   the graded Leibniz rule for beta, P1, Q1,
//   P1(u) = u^3 for homogeneous u of degree 2.
// Failures are reported as data, not thrown.
AxiomReport verify_axioms(const SpacePresentation& P, int max_degree, int trials,
                          std::uint64_t seed = kDefaultAxiomSeed);

}  // namespace mod3
