#ifndef AFFSYM_MOMENTUM_HPP
#define AFFSYM_MOMENTUM_HPP

// Momentum map of the affine action on R^2n, its Souriau cocycle, the
// associated two-cocycle on afsp and the modified coadjoint action.

#include "affsym/affine.hpp"

namespace affsym {

/// J^{(X,x)}(v) = 1/2 omega(Xv, v) + omega(x, v).
template <typename Scalar>
Scalar momentum_component(const AffineSymplecticAlg<Scalar>& xi, const Vector<Scalar>& v) {
    detail::require_dim(v.size() == 2 * xi.n(), "momentum_component: point dimension does not match the algebra");
    const auto omega = standard_form<Scalar>(xi.n());
    const Vector<Scalar> xv = xi.linear() * v;
    return Scalar(0.5) * omega(xv, v) + omega(xi.translation(), v);
}

/// J(v): xi -> J^xi(v) over the afsp basis.
template <typename Scalar>
DualElement<Scalar> momentum_map(const Vector<Scalar>& v) {
    detail::require_dim(v.size() > 0 && v.size() % 2 == 0, "momentum_map: point dimension must be even");
    return DualElement<Scalar>::from_functional(afsp_basis<Scalar>(v.size() / 2), [&v](const Matrix<Scalar>& b) {
        return momentum_component(alg_from_matrix(b), v);
    });
}

/// {J^xi, J^eta}(v) = omega(Xv + x, Yv + y).
template <typename Scalar>
Scalar poisson_analytic(const AffineSymplecticAlg<Scalar>& xi, const AffineSymplecticAlg<Scalar>& eta,
                        const Vector<Scalar>& v) {
    detail::require_same_n<Scalar>(xi.n(), eta.n(), "poisson_analytic");
    return standard_form<Scalar>(xi.n())(inf_gen(xi, v), inf_gen(eta, v));
}

/// J(Phi_g(v)) - Ad^T_{g^{-1}} J(v). Independent of v; see souriau_cocycle.
template <typename Scalar>
DualElement<Scalar> souriau_cocycle_at(const AffineSymplectic<Scalar>& g, const Vector<Scalar>& v) {
    return momentum_map(act(g, v)) - coadjoint(g, momentum_map(v));
}

/// sigma(g), evaluated at v = 0 where the coadjoint term vanishes.
template <typename Scalar>
DualElement<Scalar> souriau_cocycle(const AffineSymplectic<Scalar>& g) {
    return momentum_map(g.translation());
}

/// Sigma((X,x), (Y,y)) = omega(x, y).
template <typename Scalar>
Scalar two_cocycle(const AffineSymplecticAlg<Scalar>& xi, const AffineSymplecticAlg<Scalar>& eta) {
    detail::require_same_n<Scalar>(xi.n(), eta.n(), "two_cocycle");
    return standard_form<Scalar>(xi.n())(xi.translation(), eta.translation());
}

/// -d/dt|0 sigma(exp t xi)(eta) by central differences.
template <typename Scalar>
Scalar two_cocycle_from_souriau(const AffineSymplecticAlg<Scalar>& xi, const AffineSymplecticAlg<Scalar>& eta,
                                Scalar dt) {
    if (!(dt > Scalar(0))) throw PreconditionError("two_cocycle_from_souriau: step must be positive");
    const Scalar up = pair(souriau_cocycle(exp_alg(xi, dt)), eta);
    const Scalar down = pair(souriau_cocycle(exp_alg(xi, -dt)), eta);
    return -(up - down) / (Scalar(2) * dt);
}

/// Psi_g(alpha) = Ad^T_{g^{-1}} alpha + sigma(g).
template <typename Scalar>
DualElement<Scalar> psi_action(const AffineSymplectic<Scalar>& g, const DualElement<Scalar>& alpha) {
    return coadjoint(g, alpha) + souriau_cocycle(g);
}

/// Closed form of d/dt|0 Psi_{exp t xi}(alpha): eta -> -alpha([xi, eta]) - Sigma(xi, eta),
/// i.e. -ad^T_xi alpha + (T_e sigma) xi with T_e sigma = -Sigma^sharp.
template <typename Scalar>
DualElement<Scalar> psi_infinitesimal_closed(const AffineSymplecticAlg<Scalar>& xi, const DualElement<Scalar>& alpha) {
    return DualElement<Scalar>::from_functional(alpha.basis(), [&](const Matrix<Scalar>& b) {
        const auto eta = alg_from_matrix(b);
        return -pair(alpha, bracket(xi, eta)) - two_cocycle(xi, eta);
    });
}

/// Central difference of t -> Psi_{exp t xi}(alpha) at 0.
template <typename Scalar>
DualElement<Scalar> psi_infinitesimal(const AffineSymplecticAlg<Scalar>& xi, const DualElement<Scalar>& alpha,
                                      Scalar dt) {
    if (!(dt > Scalar(0))) throw PreconditionError("psi_infinitesimal: step must be positive");
    const auto up = psi_action(exp_alg(xi, dt), alpha);
    const auto down = psi_action(exp_alg(xi, -dt), alpha);
    return (Scalar(1) / (Scalar(2) * dt)) * (up - down);
}

}  // namespace affsym

#endif  // AFFSYM_MOMENTUM_HPP
