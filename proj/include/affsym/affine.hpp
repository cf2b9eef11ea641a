#ifndef AFFSYM_AFFINE_HPP
#define AFFSYM_AFFINE_HPP

// The affine symplectic group AfSp(R^2n) = {(A, a)}, its Lie algebra
// afsp = sp x R^2n, and the (2n+1)x(2n+1) matrix pictures
//
//     (A, a) -> (A a; 0 1),        (X, x) -> (X x; 0 0).

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "affsym/dual.hpp"
#include "affsym/linalg.hpp"

namespace affsym {

template <typename Scalar = double>
class AffineSymplectic {
public:
    AffineSymplectic(Matrix<Scalar> linear, Vector<Scalar> translation)
        : linear_(std::move(linear)), translation_(std::move(translation)) {
        const Index d = linear_.rows();
        detail::require_dim(d > 0 && d % 2 == 0 && linear_.cols() == d && translation_.size() == d,
                            "AffineSymplectic: expected a 2n x 2n matrix and a 2n-vector");
        const Scalar slack = Scalar(kDefaultTolerances.alg) * (Scalar(1) + max_abs(linear_) * max_abs(linear_));
        if (!is_symplectic(standard_form<Scalar>(d / 2), linear_, slack)) {
            throw PreconditionError("AffineSymplectic: linear part is not symplectic");
        }
    }

    static AffineSymplectic identity(Index n) {
        return AffineSymplectic(Matrix<Scalar>::Identity(2 * n, 2 * n), Vector<Scalar>::Zero(2 * n));
    }
    static AffineSymplectic translation(Vector<Scalar> a) {
        const Index d = a.size();
        return AffineSymplectic(Matrix<Scalar>::Identity(d, d), std::move(a));
    }

    Index n() const { return linear_.rows() / 2; }
    const Matrix<Scalar>& linear() const { return linear_; }
    const Vector<Scalar>& translation() const { return translation_; }

private:
    Matrix<Scalar> linear_;
    Vector<Scalar> translation_;
};

template <typename Scalar = double>
class AffineSymplecticAlg {
public:
    AffineSymplecticAlg(Matrix<Scalar> linear, Vector<Scalar> translation)
        : linear_(std::move(linear)), translation_(std::move(translation)) {
        const Index d = linear_.rows();
        detail::require_dim(d > 0 && d % 2 == 0 && linear_.cols() == d && translation_.size() == d,
                            "AffineSymplecticAlg: expected a 2n x 2n matrix and a 2n-vector");
        const Scalar slack = Scalar(kDefaultTolerances.alg) * (Scalar(1) + max_abs(linear_));
        if (!is_infinitesimally_symplectic(standard_form<Scalar>(d / 2), linear_, slack)) {
            throw PreconditionError("AffineSymplecticAlg: linear part is not in sp(2n)");
        }
    }

    static AffineSymplecticAlg zero(Index n) {
        return AffineSymplecticAlg(Matrix<Scalar>::Zero(2 * n, 2 * n), Vector<Scalar>::Zero(2 * n));
    }
    static AffineSymplecticAlg translation(Vector<Scalar> x) {
        const Index d = x.size();
        return AffineSymplecticAlg(Matrix<Scalar>::Zero(d, d), std::move(x));
    }

    Index n() const { return linear_.rows() / 2; }
    const Matrix<Scalar>& linear() const { return linear_; }
    const Vector<Scalar>& translation() const { return translation_; }

    AffineSymplecticAlg operator+(const AffineSymplecticAlg& o) const {
        return AffineSymplecticAlg(linear_ + o.linear_, translation_ + o.translation_);
    }
    friend AffineSymplecticAlg operator*(Scalar c, const AffineSymplecticAlg& a) {
        return AffineSymplecticAlg(c * a.linear_, c * a.translation_);
    }

private:
    Matrix<Scalar> linear_;
    Vector<Scalar> translation_;
};

namespace detail {

template <typename Scalar>
void require_same_n(Index a, Index b, const char* what) {
    require_dim(a == b, std::string(what) + ": elements have different n");
}

}  // namespace detail

/// (A, a)(B, b) = (AB, Ab + a).
template <typename Scalar>
AffineSymplectic<Scalar> compose(const AffineSymplectic<Scalar>& g, const AffineSymplectic<Scalar>& h) {
    detail::require_same_n<Scalar>(g.n(), h.n(), "compose");
    return AffineSymplectic<Scalar>(g.linear() * h.linear(), g.linear() * h.translation() + g.translation());
}

template <typename Scalar>
AffineSymplectic<Scalar> operator*(const AffineSymplectic<Scalar>& g, const AffineSymplectic<Scalar>& h) {
    return compose(g, h);
}

template <typename Scalar>
AffineSymplectic<Scalar> inverse(const AffineSymplectic<Scalar>& g) {
    Matrix<Scalar> a_inv = g.linear().inverse();
    Vector<Scalar> shift = -(a_inv * g.translation());
    return AffineSymplectic<Scalar>(std::move(a_inv), std::move(shift));
}

template <typename Scalar>
Matrix<Scalar> embed(const AffineSymplectic<Scalar>& g) {
    const Index d = 2 * g.n();
    Matrix<Scalar> m = Matrix<Scalar>::Zero(d + 1, d + 1);
    m.topLeftCorner(d, d) = g.linear();
    m.topRightCorner(d, 1) = g.translation();
    m(d, d) = Scalar(1);
    return m;
}

template <typename Scalar>
Matrix<Scalar> embed_alg(const AffineSymplecticAlg<Scalar>& xi) {
    const Index d = 2 * xi.n();
    Matrix<Scalar> m = Matrix<Scalar>::Zero(d + 1, d + 1);
    m.topLeftCorner(d, d) = xi.linear();
    m.topRightCorner(d, 1) = xi.translation();
    return m;
}

/// Inverse of embed_alg; the bottom row must vanish.
template <typename Scalar>
AffineSymplecticAlg<Scalar> alg_from_matrix(const Matrix<Scalar>& m) {
    const Index d = m.rows() - 1;
    detail::require_dim(m.rows() == m.cols() && d > 0 && d % 2 == 0, "alg_from_matrix: expected a (2n+1)-square matrix");
    if (max_abs(m.row(d)) > Scalar(kDefaultTolerances.alg) * (Scalar(1) + max_abs(m))) {
        throw PreconditionError("alg_from_matrix: bottom row is not zero");
    }
    return AffineSymplecticAlg<Scalar>(m.topLeftCorner(d, d), m.topRightCorner(d, 1));
}

/// Inverse of embed; the bottom row must be (0 ... 0 1).
template <typename Scalar>
AffineSymplectic<Scalar> group_from_affine_matrix(const Matrix<Scalar>& m) {
    const Index d = m.rows() - 1;
    detail::require_dim(m.rows() == m.cols() && d > 0 && d % 2 == 0,
                        "group_from_affine_matrix: expected a (2n+1)-square matrix");
    RowVector<Scalar> last = RowVector<Scalar>::Zero(d + 1);
    last(d) = Scalar(1);
    if (max_abs(m.row(d) - last) > Scalar(kDefaultTolerances.alg) * (Scalar(1) + max_abs(m))) {
        throw PreconditionError("group_from_affine_matrix: bottom row is not (0 ... 0 1)");
    }
    return AffineSymplectic<Scalar>(m.topLeftCorner(d, d), m.topRightCorner(d, 1));
}

/// [(X, x), (Y, y)] = ([X, Y], Xy - Yx).
template <typename Scalar>
AffineSymplecticAlg<Scalar> bracket(const AffineSymplecticAlg<Scalar>& xi, const AffineSymplecticAlg<Scalar>& eta) {
    detail::require_same_n<Scalar>(xi.n(), eta.n(), "bracket");
    return AffineSymplecticAlg<Scalar>(commutator(xi.linear(), eta.linear()),
                                       xi.linear() * eta.translation() - eta.linear() * xi.translation());
}

/// v -> Av + a.
template <typename Scalar>
Vector<Scalar> act(const AffineSymplectic<Scalar>& g, const Vector<Scalar>& v) {
    detail::require_dim(v.size() == 2 * g.n(), "act: point dimension does not match the group");
    return g.linear() * v + g.translation();
}

/// Infinitesimal generator v -> Xv + x.
template <typename Scalar>
Vector<Scalar> inf_gen(const AffineSymplecticAlg<Scalar>& xi, const Vector<Scalar>& v) {
    detail::require_dim(v.size() == 2 * xi.n(), "inf_gen: point dimension does not match the algebra");
    return xi.linear() * v + xi.translation();
}

/// Ad_g xi, read off embed(g) embed_alg(xi) embed(g)^{-1}.
template <typename Scalar>
AffineSymplecticAlg<Scalar> adjoint(const AffineSymplectic<Scalar>& g, const AffineSymplecticAlg<Scalar>& xi) {
    detail::require_same_n<Scalar>(g.n(), xi.n(), "adjoint");
    const Matrix<Scalar> eg = embed(g);
    return alg_from_matrix<Scalar>(eg * embed_alg(xi) * eg.inverse());
}

/// exp(t xi), read off the exponential of the (nilpotent-bottom) matrix picture.
template <typename Scalar>
AffineSymplectic<Scalar> exp_alg(const AffineSymplecticAlg<Scalar>& xi, Scalar t) {
    return group_from_affine_matrix<Scalar>(mat_exp(Matrix<Scalar>(t * embed_alg(xi))));
}

/// Generators of sp(2n): J^{-1} S for the symmetric units S = E_ij + E_ji
/// (E_ii on the diagonal), i <= j in row-major order of the upper triangle.
template <typename Scalar = double>
std::vector<Matrix<Scalar>> sp_generators(Index n) {
    const Index d = 2 * n;
    const Matrix<Scalar> j_inv = -standard_matrix<Scalar>(n);
    std::vector<Matrix<Scalar>> out;
    out.reserve(static_cast<std::size_t>(n * (2 * n + 1)));
    for (Index i = 0; i < d; ++i) {
        for (Index k = i; k < d; ++k) {
            Matrix<Scalar> s = Matrix<Scalar>::Zero(d, d);
            s(i, k) = Scalar(1);
            s(k, i) = Scalar(1);
            out.push_back(j_inv * s);
        }
    }
    return out;
}

namespace detail {

template <typename Scalar, typename Build>
BasisPtr<Scalar> cached_basis(Index n, Build&& build) {
    static std::mutex mutex;
    static std::map<Index, BasisPtr<Scalar>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build()).first;
    return it->second;
}

}  // namespace detail

/// Basis of afsp in the (2n+1) picture: sp generators first, then the 2n
/// translation directions.
template <typename Scalar = double>
BasisPtr<Scalar> afsp_basis(Index n) {
    if (n < 1) throw PreconditionError("afsp_basis: n must be at least 1");
    return detail::cached_basis<Scalar>(n, [n] {
        std::vector<Matrix<Scalar>> elements;
        for (const auto& x : sp_generators<Scalar>(n)) {
            elements.push_back(embed_alg(AffineSymplecticAlg<Scalar>(x, Vector<Scalar>::Zero(2 * n))));
        }
        for (Index i = 0; i < 2 * n; ++i) {
            elements.push_back(embed_alg(AffineSymplecticAlg<Scalar>::translation(unit<Scalar>(2 * n, i))));
        }
        return std::make_shared<const LieAlgebraBasis<Scalar>>(2 * n + 1, std::move(elements));
    });
}

template <typename Scalar>
Scalar pair(const DualElement<Scalar>& alpha, const AffineSymplecticAlg<Scalar>& xi) {
    return alpha(embed_alg(xi));
}

/// Ad^T_{g^{-1}} alpha: xi -> alpha(Ad_{g^{-1}} xi). A left action.
template <typename Scalar>
DualElement<Scalar> coadjoint(const AffineSymplectic<Scalar>& g, const DualElement<Scalar>& alpha) {
    return coadjoint_matrix(embed(g), alpha);
}

}  // namespace affsym

#endif  // AFFSYM_AFFINE_HPP
