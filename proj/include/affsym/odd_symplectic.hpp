#ifndef AFFSYM_ODD_SYMPLECTIC_HPP
#define AFFSYM_ODD_SYMPLECTIC_HPP

// Central extension of afsp by omega, the group G-hat = {(A, v, r)} with
//
//     (A, v, r)(B, w, s) = (AB, Aw + v, r + s + 1/2 omega(A^{-1} v, w)),
//
// and its faithful picture in Sp(R^{2n+2}, Omega)_{f_{n+1}}, the odd real
// symplectic group. Basis order of R^{2n+2}: {e_0, e_1..e_n, f_1..f_n, f_{n+1}}.

#include <string>

#include "affsym/affine.hpp"
#include "affsym/momentum.hpp"

namespace affsym {

template <typename Scalar = double>
class ExtendedAlg {
public:
    ExtendedAlg(Matrix<Scalar> linear, Vector<Scalar> translation, Scalar central)
        : base_(std::move(linear), std::move(translation)), central_(central) {}
    ExtendedAlg(AffineSymplecticAlg<Scalar> base, Scalar central) : base_(std::move(base)), central_(central) {}

    static ExtendedAlg zero(Index n) { return ExtendedAlg(AffineSymplecticAlg<Scalar>::zero(n), Scalar(0)); }
    /// (0, 0, 1), spanning the center.
    static ExtendedAlg central_unit(Index n) { return ExtendedAlg(AffineSymplecticAlg<Scalar>::zero(n), Scalar(1)); }

    Index n() const { return base_.n(); }
    const AffineSymplecticAlg<Scalar>& base() const { return base_; }
    const Matrix<Scalar>& linear() const { return base_.linear(); }
    const Vector<Scalar>& translation() const { return base_.translation(); }
    Scalar central() const { return central_; }

private:
    AffineSymplecticAlg<Scalar> base_;
    Scalar central_;
};

template <typename Scalar = double>
class ExtendedGroup {
public:
    ExtendedGroup(Matrix<Scalar> linear, Vector<Scalar> translation, Scalar central)
        : base_(std::move(linear), std::move(translation)), central_(central) {}
    ExtendedGroup(AffineSymplectic<Scalar> base, Scalar central) : base_(std::move(base)), central_(central) {}

    static ExtendedGroup identity(Index n) { return ExtendedGroup(AffineSymplectic<Scalar>::identity(n), Scalar(0)); }

    Index n() const { return base_.n(); }
    /// Image under the projection onto AfSp.
    const AffineSymplectic<Scalar>& base() const { return base_; }
    const Matrix<Scalar>& linear() const { return base_.linear(); }
    const Vector<Scalar>& translation() const { return base_.translation(); }
    Scalar central() const { return central_; }

private:
    AffineSymplectic<Scalar> base_;
    Scalar central_;
};

/// [(X, x, a), (Y, y, b)] = ([X, Y], Xy - Yx, omega(x, y)).
template <typename Scalar>
ExtendedAlg<Scalar> ext_bracket(const ExtendedAlg<Scalar>& a, const ExtendedAlg<Scalar>& b) {
    detail::require_same_n<Scalar>(a.n(), b.n(), "ext_bracket");
    return ExtendedAlg<Scalar>(bracket(a.base(), b.base()), two_cocycle(a.base(), b.base()));
}

template <typename Scalar>
ExtendedGroup<Scalar> ext_compose(const ExtendedGroup<Scalar>& p, const ExtendedGroup<Scalar>& q) {
    detail::require_same_n<Scalar>(p.n(), q.n(), "ext_compose");
    const auto omega = standard_form<Scalar>(p.n());
    const Vector<Scalar> pulled = p.linear().inverse() * p.translation();
    const Scalar central = p.central() + q.central() + Scalar(0.5) * omega(pulled, q.translation());
    return ExtendedGroup<Scalar>(compose(p.base(), q.base()), central);
}

template <typename Scalar>
ExtendedGroup<Scalar> operator*(const ExtendedGroup<Scalar>& p, const ExtendedGroup<Scalar>& q) {
    return ext_compose(p, q);
}

/// (A^{-1}, -A^{-1} v, -r); the omega correction vanishes since omega(u, u) = 0.
template <typename Scalar>
ExtendedGroup<Scalar> ext_inverse(const ExtendedGroup<Scalar>& p) {
    return ExtendedGroup<Scalar>(inverse(p.base()), -p.central());
}

namespace detail {

/// 1/2 omega_sharp(A^{-1} v), which equals -1/2 v^T J A for symplectic A.
template <typename Scalar>
RowVector<Scalar> rho_bottom_row(const ExtendedGroup<Scalar>& p) {
    return Scalar(-0.5) * p.translation().transpose() * standard_matrix<Scalar>(p.n()) * p.linear();
}

}  // namespace detail

/// rho(A, v, r) = (1 0 0; v A 0; r -1/2 v^T J A 1).
template <typename Scalar>
Matrix<Scalar> rho_embed(const ExtendedGroup<Scalar>& p) {
    const Index n = p.n();
    const Index d = 2 * n + 2;
    Matrix<Scalar> m = Matrix<Scalar>::Zero(d, d);
    m(0, 0) = Scalar(1);
    m.block(1, 0, 2 * n, 1) = p.translation();
    m.block(1, 1, 2 * n, 2 * n) = p.linear();
    m(d - 1, 0) = p.central();
    m.block(d - 1, 1, 1, 2 * n) = detail::rho_bottom_row(p);
    m(d - 1, d - 1) = Scalar(1);
    return m;
}

namespace detail {

template <typename Scalar>
Index odd_n(const Matrix<Scalar>& m, const char* what) {
    require_dim(m.rows() == m.cols() && m.rows() >= 4 && m.rows() % 2 == 0,
                std::string(what) + ": expected a (2n+2)-square matrix with n >= 1");
    return (m.rows() - 2) / 2;
}

}  // namespace detail

/// Inverse of rho on its image. Throws PreconditionError naming the block
/// that breaks the pattern.
template <typename Scalar>
ExtendedGroup<Scalar> group_from_matrix(const Matrix<Scalar>& m, Scalar tol = Scalar(kDefaultTolerances.alg)) {
    const Index n = detail::odd_n(m, "group_from_matrix");
    const Index d = 2 * n + 2;
    const Scalar slack = tol * (Scalar(1) + max_abs(m) * max_abs(m));
    if (max_abs(m.row(0) - unit<Scalar>(d, 0).transpose()) > slack) {
        throw PreconditionError("group_from_matrix: first row is not (1, 0, ..., 0)");
    }
    if (max_abs(m.col(d - 1) - unit<Scalar>(d, d - 1)) > slack) {
        throw PreconditionError("group_from_matrix: matrix does not fix f_{n+1} (last column)");
    }
    const Matrix<Scalar> linear = m.block(1, 1, 2 * n, 2 * n);
    if (!is_symplectic(standard_form<Scalar>(n), linear, slack)) {
        throw PreconditionError("group_from_matrix: middle block is not symplectic");
    }
    ExtendedGroup<Scalar> p(linear, m.block(1, 0, 2 * n, 1), m(d - 1, 0));
    if (max_abs(m.block(d - 1, 1, 1, 2 * n) - detail::rho_bottom_row(p)) > slack) {
        throw PreconditionError("group_from_matrix: bottom-middle row is not -1/2 v^T J A");
    }
    if (!is_symplectic(big_form<Scalar>(n), m, slack)) {
        throw PreconditionError("group_from_matrix: matrix is not symplectic for Omega");
    }
    return p;
}

/// mu(X, x, a) = (0 0 0; x X 0; a -1/2 x^T J 0).
template <typename Scalar>
Matrix<Scalar> mu_iso(const ExtendedAlg<Scalar>& a) {
    const Index n = a.n();
    const Index d = 2 * n + 2;
    Matrix<Scalar> m = Matrix<Scalar>::Zero(d, d);
    m.block(1, 0, 2 * n, 1) = a.translation();
    m.block(1, 1, 2 * n, 2 * n) = a.linear();
    m(d - 1, 0) = a.central();
    m.block(d - 1, 1, 1, 2 * n) = standard_form<Scalar>(n).sharp(a.translation(), Scalar(0.5));
    return m;
}

/// Inverse of mu on sp(R^{2n+2}, Omega)_{f_{n+1}}.
template <typename Scalar>
ExtendedAlg<Scalar> alg_from_odd_matrix(const Matrix<Scalar>& m, Scalar tol = Scalar(kDefaultTolerances.alg)) {
    const Index n = detail::odd_n(m, "alg_from_odd_matrix");
    ExtendedAlg<Scalar> a(m.block(1, 1, 2 * n, 2 * n), m.block(1, 0, 2 * n, 1), m(2 * n + 1, 0));
    if (max_abs(m - mu_iso(a)) > tol * (Scalar(1) + max_abs(m))) {
        throw PreconditionError("alg_from_odd_matrix: matrix is not in the image of mu");
    }
    return a;
}

/// exp of a in G-hat, through mu, the matrix exponential and rho^{-1}.
template <typename Scalar>
ExtendedGroup<Scalar> ext_exp(const ExtendedAlg<Scalar>& a, Scalar t) {
    return group_from_matrix<Scalar>(mat_exp(Matrix<Scalar>(t * mu_iso(a))));
}

/// Central difference of t -> rho(exp t a) at 0; equals mu(a).
template <typename Scalar>
Matrix<Scalar> d_rho(const ExtendedAlg<Scalar>& a, Scalar dt) {
    if (!(dt > Scalar(0))) throw PreconditionError("d_rho: step must be positive");
    return (rho_embed(ext_exp(a, dt)) - rho_embed(ext_exp(a, -dt))) / (Scalar(2) * dt);
}

/// Phi-hat: (M, w) -> Aw + v with (A, v) read off M.
template <typename Scalar>
Vector<Scalar> hat_act(const Matrix<Scalar>& m, const Vector<Scalar>& w) {
    const auto p = group_from_matrix(m);
    detail::require_dim(w.size() == 2 * p.n(), "hat_act: point dimension does not match the group");
    return act(p.base(), w);
}

/// J-hat^{(Y,y,b)}(w) = 1/2 omega(Yw, w) + omega(y, w) + b.
template <typename Scalar>
Scalar hat_momentum_component(const ExtendedAlg<Scalar>& a, const Vector<Scalar>& w) {
    return momentum_component(a.base(), w) + a.central();
}

/// Basis of sp(R^{2n+2}, Omega)_{f_{n+1}}: mu of the sp generators, of the
/// translation directions, and of (0, 0, 1), in that order.
template <typename Scalar = double>
BasisPtr<Scalar> odd_basis(Index n) {
    if (n < 1) throw PreconditionError("odd_basis: n must be at least 1");
    return detail::cached_basis<Scalar>(n, [n] {
        std::vector<Matrix<Scalar>> elements;
        const Vector<Scalar> zero = Vector<Scalar>::Zero(2 * n);
        for (const auto& x : sp_generators<Scalar>(n)) elements.push_back(mu_iso(ExtendedAlg<Scalar>(x, zero, Scalar(0))));
        for (Index i = 0; i < 2 * n; ++i) {
            elements.push_back(mu_iso(ExtendedAlg<Scalar>(Matrix<Scalar>::Zero(2 * n, 2 * n), unit<Scalar>(2 * n, i), Scalar(0))));
        }
        elements.push_back(mu_iso(ExtendedAlg<Scalar>::central_unit(n)));
        return std::make_shared<const LieAlgebraBasis<Scalar>>(2 * n + 2, std::move(elements));
    });
}

/// J-hat(w) over the odd symplectic algebra basis.
template <typename Scalar>
DualElement<Scalar> hat_momentum(const Vector<Scalar>& w) {
    detail::require_dim(w.size() > 0 && w.size() % 2 == 0, "hat_momentum: point dimension must be even");
    return DualElement<Scalar>::from_functional(odd_basis<Scalar>(w.size() / 2), [&w](const Matrix<Scalar>& b) {
        return hat_momentum_component(alg_from_odd_matrix(b), w);
    });
}

template <typename Scalar>
Scalar pair(const DualElement<Scalar>& alpha, const ExtendedAlg<Scalar>& a) {
    return alpha(mu_iso(a));
}

}  // namespace affsym

#endif  // AFFSYM_ODD_SYMPLECTIC_HPP
