#ifndef AFFSYM_ORBIT_HPP
#define AFFSYM_ORBIT_HPP

// The coadjoint orbit of the odd symplectic group through J-hat(e_1): its
// E*_ij picture, the representative Z = J-hat(e_1)^T, the nilpotent data
// (height, modulus) and the explicit conjugation of Z to E_{0,2n+1}.

#include <array>
#include <string>

#include "affsym/odd_symplectic.hpp"

namespace affsym {

enum class CotypeKind { nilpotent, semisimple, mixed };

inline const char* to_string(CotypeKind kind) {
    switch (kind) {
        case CotypeKind::nilpotent: return "nilpotent";
        case CotypeKind::semisimple: return "semisimple";
        case CotypeKind::mixed: return "mixed";
    }
    return "unknown";
}

template <typename Scalar = double>
struct CotypeRecord {
    CotypeKind kind = CotypeKind::nilpotent;
    Index height = 0;
    Scalar modulus = Scalar(0);
};

/// J-hat(e_1) as the coefficient matrix against E*_ij:
///   1/2 E*_{n+1,0} + 1/2 E*_{n+1,1} + E*_{2n+1,0} + E*_{2n+1,1}.
/// Its Frobenius pairing with mu(Y, y, b) is 1/2 Y_{n+1,1} + y_{n+1} + b.
template <typename Scalar = double>
Matrix<Scalar> moment_at_e1(Index n) {
    if (n < 1) throw PreconditionError("moment_at_e1: n must be at least 1");
    const Index d = 2 * n + 2;
    Matrix<Scalar> m = Matrix<Scalar>::Zero(d, d);
    m(n + 1, 0) = Scalar(0.5);
    m(n + 1, 1) = Scalar(0.5);
    m(d - 1, 0) = Scalar(1);
    m(d - 1, 1) = Scalar(1);
    return m;
}

/// Z = J-hat(e_1)^T. Throws if Z fails to be in sp(R^{2n+2}, Omega).
template <typename Scalar = double>
Matrix<Scalar> orbit_rep(Index n) {
    Matrix<Scalar> z = moment_at_e1<Scalar>(n).transpose();
    if (!is_infinitesimally_symplectic(big_form<Scalar>(n), z, Scalar(0))) {
        throw PreconditionError("orbit_rep: Z is not in sp(Omega)");
    }
    // Transposed stabilizer-dual pattern: nothing maps into e_0's coefficient
    // column and f_{n+1}'s row is empty.
    if (max_abs(z.col(0)) != Scalar(0) || max_abs(z.row(2 * n + 1)) != Scalar(0)) {
        throw PreconditionError("orbit_rep: Z does not have the transposed stabilizer pattern");
    }
    return z;
}

/// Largest k with max|Z^k| > tol. Throws OutOfScopeError when Z^dim does not
/// vanish (not nilpotent).
template <typename Scalar>
Index nilpotent_height(const Matrix<Scalar>& z, Scalar tol) {
    detail::require_dim(z.rows() == z.cols(), "nilpotent_height: matrix must be square");
    Matrix<Scalar> power = z;
    for (Index k = 0; k <= z.rows(); ++k) {
        if (max_abs(power) <= tol) return k;
        power = (power * z).eval();
    }
    throw OutOfScopeError("nilpotent_height: matrix is not nilpotent");
}

/// Omega(f_{n+1}, Z f_{n+1}); unchanged by Z -> P Z P^{-1} for P in the
/// stabilizer of f_{n+1}.
template <typename Scalar>
Scalar modulus(const Matrix<Scalar>& z, Index n) {
    const auto omega = big_form<Scalar>(n);
    detail::require_dim(z.rows() == omega.dim() && z.cols() == omega.dim(), "modulus: matrix size does not match n");
    const Vector<Scalar> f = unit<Scalar>(omega.dim(), omega.dim() - 1);
    return omega(f, Vector<Scalar>(z * f));
}

/// P = rho(I, -s, 0) with s = (2r | 0) = e_1.
template <typename Scalar = double>
Matrix<Scalar> build_P(Index n) {
    if (n < 1) throw PreconditionError("build_P: n must be at least 1");
    Vector<Scalar> s = Vector<Scalar>::Zero(2 * n);
    s(0) = Scalar(1);  // 2 r with r = (1/2, 0, ..., 0)
    const Matrix<Scalar> p = rho_embed(ExtendedGroup<Scalar>(Matrix<Scalar>::Identity(2 * n, 2 * n), -s, Scalar(0)));
    const Index d = 2 * n + 2;
    if (!is_symplectic(big_form<Scalar>(n), p, Scalar(kDefaultTolerances.alg)) ||
        max_abs(p.col(d - 1) - unit<Scalar>(d, d - 1)) != Scalar(0)) {
        throw PreconditionError("build_P: P is not in the stabilizer of f_{n+1}");
    }
    return p;
}

template <typename Scalar = double>
struct NormalForm {
    Matrix<Scalar> P;
    Matrix<Scalar> N;
};

/// Blocks of Z = (0 r~^T 1; 0 D~ s~; 0 0 0) in the {e_0 | middle 2n | f_{n+1}} split.
template <typename Scalar = double>
struct OrbitBlocks {
    RowVector<Scalar> r_tilde;
    Matrix<Scalar> d_tilde;
    Vector<Scalar> s_tilde;
};

template <typename Scalar>
OrbitBlocks<Scalar> orbit_blocks(const Matrix<Scalar>& z, Index n) {
    const Index m = 2 * n;
    return {z.block(0, 1, 1, m), z.block(1, 1, m, m), z.block(1, m + 1, m, 1)};
}

/// The four blocks of Z P^{-1} that must cancel for the choice d = -s~, f = 0:
/// -r~^T d - f, r~^T + 1/2 d^T J, -D~ d - f s~, D~ + 1/2 s~ (d^T J).
template <typename Scalar>
std::array<Scalar, 4> normalize_cancellations(Index n) {
    const auto blocks = orbit_blocks(orbit_rep<Scalar>(n), n);
    const Vector<Scalar> d = -blocks.s_tilde;
    const Scalar f = Scalar(0);
    const RowVector<Scalar> dtj = d.transpose() * standard_matrix<Scalar>(n);
    return {
        std::abs(Scalar(-(blocks.r_tilde * d)(0)) - f),
        max_abs(blocks.r_tilde + Scalar(0.5) * dtj),
        max_abs(-(blocks.d_tilde * d) - f * blocks.s_tilde),
        max_abs(blocks.d_tilde + Scalar(0.5) * blocks.s_tilde * dtj),
    };
}

/// P and N = P Z P^{-1}; throws if any cancellation or the corner pattern fails.
template <typename Scalar = double>
NormalForm<Scalar> normalize(Index n, Scalar tol = Scalar(kDefaultTolerances.alg)) {
    const auto residuals = normalize_cancellations<Scalar>(n);
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        if (residuals[i] > tol) {
            throw PreconditionError("normalize: cancellation " + std::to_string(i + 1) + " does not vanish");
        }
    }
    NormalForm<Scalar> out{build_P<Scalar>(n), {}};
    out.N = out.P * orbit_rep<Scalar>(n) * out.P.inverse();
    Matrix<Scalar> corner = Matrix<Scalar>::Zero(2 * n + 2, 2 * n + 2);
    corner(0, 2 * n + 1) = Scalar(1);
    if (max_abs(out.N - corner) > tol) throw PreconditionError("normalize: P Z P^{-1} is not E_{0,2n+1}");
    return out;
}

/// Cotype of a nilpotent sp(Omega) element of height at most one. Anything
/// else needs the general affine cotype theory and is rejected.
template <typename Scalar>
CotypeRecord<Scalar> classify(const Matrix<Scalar>& z, Index n, Scalar tol = Scalar(kDefaultTolerances.alg)) {
    if (!is_infinitesimally_symplectic(big_form<Scalar>(n), z, tol * (Scalar(1) + max_abs(z)))) {
        throw PreconditionError("classify: matrix is not in sp(Omega)");
    }
    Index height = 0;
    try {
        height = nilpotent_height(z, tol);
    } catch (const OutOfScopeError&) {
        throw OutOfScopeError("classify: element is not nilpotent; semisimple and mixed cotypes are not handled");
    }
    if (height >= 2) {
        throw OutOfScopeError("classify: nilpotent of height " + std::to_string(height) +
                              "; only heights 0 and 1 are handled");
    }
    return {CotypeKind::nilpotent, height, modulus(z, n)};
}

/// (I, w, 0), which moves 0 to w under Phi-hat.
template <typename Scalar>
ExtendedGroup<Scalar> transitivity_witness(const Vector<Scalar>& w) {
    detail::require_dim(w.size() > 0 && w.size() % 2 == 0, "transitivity_witness: point dimension must be even");
    return ExtendedGroup<Scalar>(AffineSymplectic<Scalar>::translation(w), Scalar(0));
}

}  // namespace affsym

#endif  // AFFSYM_ORBIT_HPP
