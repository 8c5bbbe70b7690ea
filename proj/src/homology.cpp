#include "mod3/homology.hpp"

#include <algorithm>

namespace mod3 {

bool HomologyClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](F3 c) { return c.is_zero(); });
}

bool F3Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](F3 c) { return c.is_zero(); });
}

std::size_t F3Matrix::rank() const {
    F3Matrix w = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && w.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == rows_)
            continue;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(w.at(rank, c), w.at(pivot, c));
        F3 inv = w.at(rank, col).inverse();
        for (std::size_t c = 0; c < cols_; ++c)
            w.at(rank, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || w.at(r, col).is_zero())
                continue;
            F3 f = w.at(r, col);
            for (std::size_t c = 0; c < cols_; ++c)
                w.at(r, c) -= f * w.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::vector<F3> F3Matrix::apply(const std::vector<F3>& v) const {
    if (v.size() != cols_)
        throw DegreeMismatchError("matrix-vector size mismatch");
    std::vector<F3> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        F3 s;
        for (std::size_t c = 0; c < cols_; ++c)
            s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

F3Matrix operator*(const F3Matrix& a, const F3Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DegreeMismatchError("matrix product shape mismatch");
    F3Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            F3 f = a.at(r, k);
            if (f.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                out.at(r, c) += f * b.at(k, c);
        }
    return out;
}

F3Matrix operator-(const F3Matrix& a, const F3Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DegreeMismatchError("matrix difference shape mismatch");
    F3Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

namespace {

std::size_t basis_index(const std::vector<Monomial>& bas, const Monomial& m) {
    auto it = std::lower_bound(bas.begin(), bas.end(), m);
    if (it == bas.end() || !(*it == m))
        throw PresentationMismatchError("monomial is not a basis element of this degree");
    return static_cast<std::size_t>(it - bas.begin());
}

}  // namespace

HomologyClass dual_class(const SpacePresentation& P, const Monomial& m) {
    int k = m.degree();
    std::vector<Monomial> bas = basis(P, k);
    HomologyClass y{k, std::vector<F3>(bas.size())};
    y.coeffs[basis_index(bas, m)] = F3::one();
    return y;
}

HomologyClass zero_class(const SpacePresentation& P, int degree) {
    return HomologyClass{degree, std::vector<F3>(basis(P, degree).size())};
}

F3 kronecker(const Element& g, const HomologyClass& y, const SpacePresentation& P) {
    check_element(g, P);
    if (g.is_zero())
        return F3::zero();
    if (!g.is_homogeneous() || g.degree() != y.degree)
        throw DegreeMismatchError("pairing requires matching homogeneous degrees");
    std::vector<Monomial> bas = basis(P, y.degree);
    if (y.coeffs.size() != bas.size())
        throw DegreeMismatchError("homology class has the wrong coefficient length");
    F3 s;
    for (const auto& [m, c] : g.terms)
        s += c * y.coeffs[basis_index(bas, m)];
    return s;
}

HomologyClass cap(const Element& alpha, const HomologyClass& y, const SpacePresentation& P) {
    check_element(alpha, P);
    if (alpha.is_zero() || !alpha.is_homogeneous())
        throw DegreeMismatchError("cap requires a non-zero homogeneous multiplier");
    int m_deg = alpha.degree();
    if (m_deg > y.degree)
        throw DegreeMismatchError("cap multiplier degree exceeds the class degree");
    std::vector<Monomial> target = basis(P, y.degree - m_deg);
    std::vector<Monomial> source = basis(P, y.degree);
    if (y.coeffs.size() != source.size())
        throw DegreeMismatchError("homology class has the wrong coefficient length");
    HomologyClass out{y.degree - m_deg, std::vector<F3>(target.size())};
    for (std::size_t j = 0; j < target.size(); ++j) {
        Element prod = mul(alpha, Element::monomial(target[j]), P);
        F3 s;
        for (const auto& [m, c] : prod.terms)
            s += c * y.coeffs[basis_index(source, m)];
        out.coeffs[j] = s;
    }
    return out;
}

F3Matrix cohomology_op_matrix(OperationKind kind, int from_degree, const SpacePresentation& P) {
    int to_degree = from_degree + degree_shift(kind);
    if (from_degree < 0 || to_degree > P.degree_cap)
        throw OutOfRangeError("operation degree outside the presentation cap");
    std::vector<Monomial> from = basis(P, from_degree);
    std::vector<Monomial> to = basis(P, to_degree);
    F3Matrix mat(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        Element img = apply_op(kind, Element::monomial(from[j]), P);
        for (const auto& [m, c] : img.terms)
            mat.at(basis_index(to, m), j) = c;
    }
    return mat;
}

F3Matrix transpose_op(OperationKind kind, int k, const SpacePresentation& P) {
    if (k < 0 || k > P.degree_cap)
        throw OutOfRangeError("homology degree " + std::to_string(k) + " outside [0, " +
                              std::to_string(P.degree_cap) + "]");
    std::size_t dim_k = basis(P, k).size();
    int source = k - degree_shift(kind);
    if (source < 0)
        return F3Matrix(0, dim_k);
    F3Matrix c = cohomology_op_matrix(kind, source, P);
    F3Matrix t(c.cols(), c.rows());
    for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t j = 0; j < c.cols(); ++j)
            t.at(j, r) = c.at(r, j);
    return t;
}

HomologyClass apply(const F3Matrix& m, const HomologyClass& y, int target_degree) {
    return HomologyClass{target_degree, m.apply(y.coeffs)};
}

HomologyClass d5_shadow(const HomologyClass& z, const SpacePresentation& P) {
    if (z.degree < 5)
        throw OutOfRangeError("d5 shadow needs degree >= 5, got " + std::to_string(z.degree));
    HomologyClass mid = apply(transpose_op(OperationKind::P1, z.degree, P), z, z.degree - 4);
    return apply(transpose_op(OperationKind::Beta, z.degree - 4, P), mid, z.degree - 5);
}

F3Matrix d5_shadow_matrix(int p, const SpacePresentation& P) {
    if (p < 5)
        throw OutOfRangeError("d5 shadow needs degree >= 5, got " + std::to_string(p));
    return transpose_op(OperationKind::Beta, p - 4, P) * transpose_op(OperationKind::P1, p, P);
}

}  // namespace mod3
