#include <string>

#include <doctest.h>

#include "support.hpp"

using namespace affsym;
using namespace affsym::test;

namespace {

Mat corner(Index n) {
    Mat m = Mat::Zero(2 * n + 2, 2 * n + 2);
    m(0, 2 * n + 1) = 1.0;
    return m;
}

}  // namespace

TEST_CASE("moment_at_e1 is the E*_ij picture of J-hat(e_1)") {
    CHECK(moment_at_e1(1) == mat(4, 4, {0, 0, 0, 0, 0, 0, 0, 0, 0.5, 0.5, 0, 0, 1, 1, 0, 0}));
    for (Index n = 1; n <= 3; ++n) {
        const auto basis = odd_basis(n);
        const auto from_matrix = DualElement<double>::from_frobenius(basis, moment_at_e1(n));
        const auto direct = hat_momentum(unit(2 * n, 0));
        CHECK(distance(from_matrix, direct) < 1e-12);
    }
    CHECK_THROWS_AS(moment_at_e1(0), PreconditionError);
}

TEST_CASE("orbit_rep") {
    CHECK(orbit_rep(1) == mat(4, 4, {0, 0, 0.5, 1, 0, 0, 0.5, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    for (Index n = 1; n <= 4; ++n) {
        const Mat z = orbit_rep(n);
        CHECK(z == moment_at_e1(n).transpose());
        CHECK(is_infinitesimally_symplectic(big_form(n), z, 0.0));
        CHECK(!z.isZero());
        CHECK((z * z).isZero());  // exact
    }
}

TEST_CASE("nilpotent_height") {
    CHECK(nilpotent_height(Mat(Mat::Zero(3, 3)), 0.0) == 0);
    CHECK(nilpotent_height(mat(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0}), 0.0) == 1);
    CHECK(nilpotent_height(mat(3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0}), 0.0) == 2);
    CHECK_THROWS_AS(nilpotent_height(mat(2, 2, {1, 0, 0, 0}), 0.0), OutOfScopeError);
    CHECK_THROWS_AS(nilpotent_height(Mat(Mat::Zero(2, 3)), 0.0), DimensionError);
    for (Index n = 1; n <= 3; ++n) CHECK(nilpotent_height(orbit_rep(n), 0.0) == 1);
}

TEST_CASE("modulus") {
    for (Index n = 1; n <= 3; ++n) {
        CHECK(modulus(orbit_rep(n), n) == 1.0);
        CHECK(modulus(corner(n), n) == 1.0);
        CHECK(modulus(Mat(Mat::Zero(2 * n + 2, 2 * n + 2)), n) == 0.0);
    }
    CHECK_THROWS_AS(modulus(Mat(Mat::Zero(3, 3)), 1), DimensionError);

    // invariant under conjugation by the stabilizer of f_{n+1}
    Sampler<> s(107);
    for (Index n = 1; n <= 3; ++n) {
        const Mat z = orbit_rep(n);
        for (int t = 0; t < 30; ++t) {
            const Mat p = rho_embed(s.ext_group(n));
            CHECK(modulus(Mat(p * z * p.inverse()), n) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("build_P") {
    CHECK(build_P(1) == mat(4, 4, {1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0.5, 1}));
    for (Index n = 1; n <= 3; ++n) {
        const Mat p = build_P(n);
        CHECK(is_symplectic(big_form(n), p, 0.0));
        CHECK(p.col(2 * n + 1) == unit(2 * n + 2, 2 * n + 1));
    }
    CHECK_THROWS_AS(build_P(0), PreconditionError);
}

TEST_CASE("orbit_blocks") {
    const auto blocks = orbit_blocks(orbit_rep(1), 1);
    CHECK(blocks.r_tilde == Row(vec({0, 0.5}).transpose()));
    CHECK(blocks.d_tilde == mat(2, 2, {0, 0.5, 0, 0}));
    CHECK(blocks.s_tilde == vec({1, 0}));
}

TEST_CASE("normalize") {
    for (Index n = 1; n <= 4; ++n) {
        for (double r : normalize_cancellations<double>(n)) CHECK(r == 0.0);
        const auto nf = normalize<double>(n, 0.0);
        CHECK(nf.N == corner(n));
        CHECK(nf.P == build_P(n));
        CHECK(nilpotent_height(nf.N, 0.0) == 1);
    }
}

TEST_CASE("classify") {
    for (Index n = 1; n <= 3; ++n) {
        const auto rec = classify(orbit_rep(n), n);
        CHECK(rec.kind == CotypeKind::nilpotent);
        CHECK(rec.height == 1);
        CHECK(rec.modulus == 1.0);
        const auto zero = classify(Mat(Mat::Zero(2 * n + 2, 2 * n + 2)), n);
        CHECK(zero.height == 0);
        CHECK(zero.modulus == 0.0);
    }
    CHECK(std::string(to_string(CotypeKind::nilpotent)) == "nilpotent");
    CHECK(std::string(to_string(CotypeKind::semisimple)) == "semisimple");

    // height 2: X nilpotent with x outside its image
    const Mat height_two = mu_iso(ExtendedAlg<>(mat(2, 2, {0, 1, 0, 0}), vec({0, 1}), 0.0));
    CHECK(nilpotent_height(height_two, 0.0) >= 2);
    CHECK_THROWS_AS(classify(height_two, 1), OutOfScopeError);

    const Mat hyperbolic = mu_iso(ExtendedAlg<>(mat(2, 2, {1, 0, 0, -1}), vec({0, 0}), 0.0));
    CHECK_THROWS_AS(classify(hyperbolic, 1), OutOfScopeError);

    Mat not_sp = orbit_rep(1);
    not_sp(2, 0) = 1.0;
    CHECK_THROWS_AS(classify(not_sp, 1), PreconditionError);
}

TEST_CASE("transitivity_witness") {
    Sampler<> s(109);
    for (Index n = 1; n <= 3; ++n) {
        for (int t = 0; t < 20; ++t) {
            const Vec w = s.vector(2 * n);
            const auto g = transitivity_witness(w);
            CHECK(hat_act(rho_embed(g), Vec(Vec::Zero(2 * n))) == w);
            CHECK(g.central() == 0.0);
        }
    }
    CHECK_THROWS_AS(transitivity_witness(vec({1, 2, 3})), DimensionError);
}
