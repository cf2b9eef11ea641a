#include <doctest.h>

#include "support.hpp"

using namespace affsym;
using namespace affsym::test;

namespace {

const Mat kShear = mat(2, 2, {0, 1, 0, 0});

AffineSymplecticAlg<> shift(const Vec& x) { return AffineSymplecticAlg<>::translation(x); }

}  // namespace

TEST_CASE("momentum_component worked values") {
    const Vec e1 = vec({1, 0}), f1 = vec({0, 1});
    CHECK(momentum_component(shift(e1), f1) == -1.0);
    CHECK(momentum_component(shift(e1), e1) == 0.0);
    CHECK(momentum_component(AffineSymplecticAlg<>(kShear, vec({0, 0})), f1) == -0.5);
    CHECK(momentum_component(AffineSymplecticAlg<>::zero(2), vec({1, 2, 3, 4})) == 0.0);
    CHECK_THROWS_AS(momentum_component(shift(e1), vec({1, 2, 3, 4})), DimensionError);
}

TEST_CASE("momentum_component is quadratic plus linear in v") {
    Sampler<> s(51);
    for (Index n = 1; n <= 3; ++n) {
        const auto omega = standard_form(n);
        for (int t = 0; t < 30; ++t) {
            const auto xi = s.affine_alg(n);
            const Vec v = s.vector(2 * n);
            const double want = 0.5 * omega_entrywise(omega.form(), xi.linear() * v, v) +
                                omega_entrywise(omega.form(), xi.translation(), v);
            CHECK(momentum_component(xi, v) == doctest::Approx(want).epsilon(1e-13));
            CHECK(momentum_component(xi, Vec(-v)) ==
                  doctest::Approx(momentum_component(xi, v) - 2 * omega(xi.translation(), v)).epsilon(1e-12));
        }
    }
}

TEST_CASE("momentum_map agrees with momentum_component") {
    Sampler<> s(53);
    for (Index n = 1; n <= 3; ++n) {
        for (int t = 0; t < 20; ++t) {
            const Vec v = s.vector(2 * n);
            const auto j = momentum_map(v);
            const auto xi = s.affine_alg(n);
            CHECK(pair(j, xi) == doctest::Approx(momentum_component(xi, v)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(momentum_map(vec({1, 2, 3})), DimensionError);
}

TEST_CASE("poisson brackets of momentum components") {
    const Vec e1 = vec({1, 0}), f1 = vec({0, 1});
    const Vec v = vec({0.3, -0.8});
    CHECK(poisson_analytic(shift(e1), shift(f1), v) == -1.0);
    CHECK(two_cocycle(shift(e1), shift(f1)) == -1.0);
    CHECK(poisson_numeric(standard_form(1), [&](const Vec& p) { return momentum_component(shift(e1), p); },
                          [&](const Vec& p) { return momentum_component(shift(f1), p); }, v, kStep) ==
          doctest::Approx(-1.0).epsilon(1e-9));

    Sampler<> s(57);
    for (Index n = 1; n <= 3; ++n) {
        const auto omega = standard_form(n);
        for (int t = 0; t < 30; ++t) {
            const auto xi = s.affine_alg(n), eta = s.affine_alg(n);
            const Vec p = s.vector(2 * n);
            const double analytic = poisson_analytic(xi, eta, p);
            const double numeric =
                poisson_numeric(omega, [&](const Vec& q) { return momentum_component(xi, q); },
                                [&](const Vec& q) { return momentum_component(eta, q); }, p, kStep);
            CHECK(rel_err(numeric, analytic) < kFd);
            // {J^xi, J^eta} = J^[xi,eta] + Sigma(xi, eta)
            CHECK(analytic == doctest::Approx(momentum_component(bracket(xi, eta), p) + two_cocycle(xi, eta))
                                  .epsilon(1e-11));
        }
    }
}

TEST_CASE("two_cocycle") {
    Sampler<> s(59);
    for (Index n = 1; n <= 3; ++n) {
        for (int t = 0; t < 30; ++t) {
            const auto x = s.affine_alg(n), y = s.affine_alg(n), z = s.affine_alg(n);
            CHECK(two_cocycle(x, y) == doctest::Approx(-two_cocycle(y, x)).epsilon(1e-14));
            // cocycle identity in the form Sigma(z,[x,y]) = Sigma([z,x],y) + Sigma(x,[z,y])
            CHECK(two_cocycle(z, bracket(x, y)) ==
                  doctest::Approx(two_cocycle(bracket(z, x), y) + two_cocycle(x, bracket(z, y))).epsilon(1e-11));
            CHECK(rel_err(two_cocycle_from_souriau(x, y, kStep), two_cocycle(x, y)) < kFd);
        }
    }
    const auto zero = AffineSymplecticAlg<>::zero(1);
    CHECK_THROWS_AS(two_cocycle_from_souriau(zero, zero, 0.0), PreconditionError);
    CHECK_THROWS_AS(two_cocycle(zero, AffineSymplecticAlg<>::zero(2)), DimensionError);
}

TEST_CASE("souriau cocycle") {
    const auto basis = afsp_basis(2);
    Sampler<> s(61);

    const AffineSymplectic<> linear_only(s.symplectic_matrix(2), Vec::Zero(4));
    CHECK(max_abs(souriau_cocycle(linear_only).values()) == 0.0);
    CHECK(max_abs(souriau_cocycle(AffineSymplectic<>::identity(2)).values()) == 0.0);

    // sigma of a pure translation by a is xi -> J^xi(a)
    const Vec a = s.vector(4);
    const auto xi = s.affine_alg(2);
    CHECK(pair(souriau_cocycle(AffineSymplectic<>::translation(a)), xi) ==
          doctest::Approx(momentum_component(xi, a)).epsilon(1e-12));

    for (Index n = 1; n <= 3; ++n) {
        for (int t = 0; t < 30; ++t) {
            const auto g = s.affine_group(n), h = s.affine_group(n);
            const Vec v = s.vector(2 * n), w = s.vector(2 * n);
            CHECK(distance(souriau_cocycle_at(g, v), souriau_cocycle_at(g, w)) < kAlg);
            CHECK(distance(souriau_cocycle_at(g, v), souriau_cocycle(g)) < kAlg);
            CHECK(distance(souriau_cocycle(g * h), souriau_cocycle(g) + coadjoint(g, souriau_cocycle(h))) < kAlg);
        }
    }
}

TEST_CASE("psi_action") {
    Sampler<> s(67);
    for (Index n = 1; n <= 3; ++n) {
        const auto basis = afsp_basis(n);
        for (int t = 0; t < 30; ++t) {
            const auto g = s.affine_group(n), h = s.affine_group(n);
            const auto alpha = s.dual(basis);
            const Vec w = s.vector(2 * n);
            CHECK(distance(psi_action(AffineSymplectic<>::identity(n), alpha), alpha) < kAlg);
            CHECK(distance(psi_action(g * h, alpha), psi_action(g, psi_action(h, alpha))) < kAlg);
            CHECK(distance(psi_action(g, momentum_map(w)), momentum_map(act(g, w))) < kAlg);
        }
    }
}

TEST_CASE("psi_infinitesimal") {
    const auto basis = afsp_basis(1);
    Sampler<> s(71);

    // alpha = 0 leaves only the cocycle term: eta -> -Sigma(xi, eta)
    const auto zero = DualElement<double>::zero(basis);
    const auto xi = s.affine_alg(1);
    const auto at_zero = psi_infinitesimal_closed(xi, zero);
    for (Index k = 0; k < basis->size(); ++k) {
        const auto eta = alg_from_matrix((*basis)[k]);
        CHECK(at_zero.values()(k) == doctest::Approx(-two_cocycle(xi, eta)).epsilon(1e-14));
    }
    const auto e1 = shift(vec({1, 0})), f1 = shift(vec({0, 1}));
    CHECK(pair(psi_infinitesimal_closed(e1, zero), f1) == doctest::Approx(1.0));

    for (Index n = 1; n <= 3; ++n) {
        const auto b = afsp_basis(n);
        for (int t = 0; t < 20; ++t) {
            const auto x = s.affine_alg(n);
            const auto alpha = s.dual(b);
            const auto closed = psi_infinitesimal_closed(x, alpha);
            const auto numeric = psi_infinitesimal(x, alpha, kStep);
            CHECK(distance(numeric, closed) <= kFd * std::max(1.0, max_abs(closed.values())));
        }
    }
    CHECK_THROWS_AS(psi_infinitesimal(xi, zero, -1.0), PreconditionError);
}
