#ifndef AFFSYM_DUAL_HPP
#define AFFSYM_DUAL_HPP

// Coordinates on matrix Lie algebras and linear functionals over them.

#include <memory>
#include <utility>
#include <vector>

#include "affsym/linalg.hpp"

namespace affsym {

template <typename Derived, typename Other>
typename Derived::Scalar frobenius(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b) {
    return a.cwiseProduct(b).sum();
}

/// Ordered basis of a matrix Lie algebra embedded in gl(ambient). Expansion
/// of an element goes through the Frobenius Gram system, so the basis need
/// not be orthonormal.
template <typename Scalar>
class LieAlgebraBasis {
public:
    LieAlgebraBasis(Index ambient, std::vector<Matrix<Scalar>> elements)
        : ambient_(ambient), elements_(std::move(elements)) {
        const Index k = size();
        if (k == 0) throw PreconditionError("LieAlgebraBasis: empty basis");
        for (const auto& e : elements_) {
            detail::require_dim(e.rows() == ambient_ && e.cols() == ambient_,
                                "LieAlgebraBasis: element does not match the ambient size");
        }
        Matrix<Scalar> gram(k, k);
        for (Index i = 0; i < k; ++i) {
            for (Index j = i; j < k; ++j) gram(i, j) = gram(j, i) = frobenius(elements_[i], elements_[j]);
        }
        Eigen::FullPivLU<Matrix<Scalar>> rank_check(gram);
        rank_check.setThreshold(Scalar(1e-12));
        if (rank_check.rank() != k) throw PreconditionError("LieAlgebraBasis: elements are linearly dependent");
        gram_.compute(gram);
    }

    Index ambient() const { return ambient_; }
    Index size() const { return static_cast<Index>(elements_.size()); }
    const Matrix<Scalar>& operator[](Index k) const { return elements_[static_cast<std::size_t>(k)]; }
    const std::vector<Matrix<Scalar>>& elements() const { return elements_; }

    Matrix<Scalar> combine(const Vector<Scalar>& coords) const {
        detail::require_dim(coords.size() == size(), "LieAlgebraBasis::combine: wrong coordinate count");
        Matrix<Scalar> out = Matrix<Scalar>::Zero(ambient_, ambient_);
        for (Index k = 0; k < size(); ++k) out += coords(k) * elements_[static_cast<std::size_t>(k)];
        return out;
    }

    /// Coordinates of m; throws if m leaves the span by more than tol
    /// (relative to its largest entry).
    Vector<Scalar> coordinates(const Matrix<Scalar>& m, Scalar tol = Scalar(kDefaultTolerances.alg)) const {
        detail::require_dim(m.rows() == ambient_ && m.cols() == ambient_,
                            "coordinates: matrix does not match the ambient size");
        Vector<Scalar> rhs(size());
        for (Index k = 0; k < size(); ++k) rhs(k) = frobenius(elements_[static_cast<std::size_t>(k)], m);
        Vector<Scalar> coords = gram_.solve(rhs);
        if (max_abs(m - combine(coords)) > tol * (Scalar(1) + max_abs(m))) {
            throw PreconditionError("coordinates: element lies outside the span of the basis");
        }
        return coords;
    }

private:
    Index ambient_;
    std::vector<Matrix<Scalar>> elements_;
    Eigen::LDLT<Matrix<Scalar>> gram_;
};

template <typename Scalar>
using BasisPtr = std::shared_ptr<const LieAlgebraBasis<Scalar>>;

/// Linear functional on the span of a LieAlgebraBasis, stored as its values
/// on the basis elements.
template <typename Scalar>
class DualElement {
public:
    DualElement(BasisPtr<Scalar> basis, Vector<Scalar> values) : basis_(std::move(basis)), values_(std::move(values)) {
        if (!basis_) throw PreconditionError("DualElement: null basis");
        detail::require_dim(values_.size() == basis_->size(), "DualElement: value count does not match the basis");
        if (!values_.allFinite()) throw PreconditionError("DualElement: non-finite coefficient");
    }

    static DualElement zero(BasisPtr<Scalar> basis) {
        const Index k = basis->size();
        return DualElement(std::move(basis), Vector<Scalar>::Zero(k));
    }

    /// Functional whose value on the k-th basis element is f(basis[k]).
    template <typename F>
    static DualElement from_functional(BasisPtr<Scalar> basis, F&& f) {
        Vector<Scalar> values(basis->size());
        for (Index k = 0; k < basis->size(); ++k) values(k) = f((*basis)[k]);
        return DualElement(std::move(basis), std::move(values));
    }

    /// The E*_ij picture: m represents X -> sum_ij m_ij X_ij. Distinct m can
    /// give the same functional on a proper subalgebra.
    static DualElement from_frobenius(BasisPtr<Scalar> basis, const Matrix<Scalar>& m) {
        return from_functional(std::move(basis), [&m](const Matrix<Scalar>& b) { return frobenius(m, b); });
    }

    const BasisPtr<Scalar>& basis() const { return basis_; }
    const Vector<Scalar>& values() const { return values_; }

    /// Pairing with an element of the algebra given in the ambient picture.
    Scalar operator()(const Matrix<Scalar>& element) const { return values_.dot(basis_->coordinates(element)); }

    DualElement operator+(const DualElement& o) const { return DualElement(basis_, values_ + o.on(*basis_)); }
    DualElement operator-(const DualElement& o) const { return DualElement(basis_, values_ - o.on(*basis_)); }
    DualElement operator-() const { return DualElement(basis_, -values_); }
    friend DualElement operator*(Scalar c, const DualElement& a) { return DualElement(a.basis_, c * a.values_); }

    /// Values on the elements of another basis of the same algebra.
    Vector<Scalar> on(const LieAlgebraBasis<Scalar>& other) const {
        if (&other == basis_.get()) return values_;
        Vector<Scalar> out(other.size());
        for (Index k = 0; k < other.size(); ++k) out(k) = (*this)(other[k]);
        return out;
    }

private:
    BasisPtr<Scalar> basis_;
    Vector<Scalar> values_;
};

/// Largest pairing difference over the basis of a. Zero iff the functionals agree.
template <typename Scalar>
Scalar distance(const DualElement<Scalar>& a, const DualElement<Scalar>& b) {
    return max_abs(a.values() - b.on(*a.basis()));
}

template <typename Scalar>
Scalar pair(const DualElement<Scalar>& alpha, const Matrix<Scalar>& element) {
    return alpha(element);
}

/// Ad^T_{g^{-1}} alpha for a group element given as an invertible matrix acting
/// on the ambient picture by conjugation: X -> alpha(g^{-1} X g).
template <typename Scalar>
DualElement<Scalar> coadjoint_matrix(const Matrix<Scalar>& g, const DualElement<Scalar>& alpha) {
    const auto& basis = *alpha.basis();
    detail::require_dim(g.rows() == basis.ambient() && g.cols() == basis.ambient(),
                        "coadjoint: group matrix does not match the ambient size");
    const Matrix<Scalar> g_inv = g.inverse();
    return DualElement<Scalar>::from_functional(
        alpha.basis(), [&](const Matrix<Scalar>& b) { return alpha(Matrix<Scalar>(g_inv * b * g)); });
}

}  // namespace affsym

#endif  // AFFSYM_DUAL_HPP
