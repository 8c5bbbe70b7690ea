#pragma once

#include <cstddef>
#include <vector>

#include "mod3/algebra.hpp"
#include "mod3/steenrod.hpp"

namespace mod3 {

// A mod-3 homology class in a fixed degree, as a coefficient vector over the
// dual of basis(P, degree).
struct HomologyClass {
    int degree = 0;
    std::vector<F3> coeffs;

    bool is_zero() const;
    bool operator==(const HomologyClass& o) const = default;
};

// Dense exact matrix over F3.
class F3Matrix {
public:
    F3Matrix() = default;
    F3Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F3& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    F3 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    // Exact Gaussian elimination over F3.
    std::size_t rank() const;
    std::vector<F3> apply(const std::vector<F3>& v) const;

    friend F3Matrix operator*(const F3Matrix& a, const F3Matrix& b);
    friend F3Matrix operator-(const F3Matrix& a, const F3Matrix& b);
    bool operator==(const F3Matrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F3> a_;
};

// The dual-basis class of a monomial of P.
HomologyClass dual_class(const SpacePresentation& P, const Monomial& m);

// Zero class in the given degree.
HomologyClass zero_class(const SpacePresentation& P, int degree);

// Dual-basis pairing of a degree-k cohomology element against a degree-k
// homology class. Throws DegreeMismatchError when degrees differ.
F3 kronecker(const Element& g, const HomologyClass& y, const SpacePresentation& P);

// Adjoint of left cup multiplication: the unique class with
// kronecker(g, cap(alpha, y)) = kronecker(mul(alpha, g), y) for all g.
// alpha must be non-zero homogeneous of degree <= y.degree.
HomologyClass cap(const Element& alpha, const HomologyClass& y, const SpacePresentation& P);

// Matrix of the cohomology operation H^from -> H^(from+shift) in the
// monomial bases (columns indexed by basis(P, from)).
F3Matrix cohomology_op_matrix(OperationKind kind, int from_degree, const SpacePresentation& P);

// Matrix of the homology operation H_k -> H_(k-shift), the plain transpose
// of the cohomology matrix. Degrees below the shift give an empty (0 x dim)
// matrix; k outside [0, degree_cap] throws OutOfRangeError.
F3Matrix transpose_op(OperationKind kind, int k, const SpacePresentation& P);

HomologyClass apply(const F3Matrix& m, const HomologyClass& y, int target_degree);

// Composite homology operation beta* o P1* : H_p -> H_(p-5), the mod-3
// shadow of the first AHSS differential for 3-local connective KO theory.
// Throws OutOfRangeError for p < 5.
HomologyClass d5_shadow(const HomologyClass& z, const SpacePresentation& P);

// Matrix of d5_shadow on H_p.
F3Matrix d5_shadow_matrix(int p, const SpacePresentation& P);

}  // namespace mod3
