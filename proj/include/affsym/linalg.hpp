#ifndef AFFSYM_LINALG_HPP
#define AFFSYM_LINALG_HPP

// Dense building blocks: matrix aliases, symplectic forms, the matrix
// exponential and central-difference helpers.
//
// Form convention. A SymplecticStructure stores a skew matrix K and evaluates
//
//     omega(u, v) = (K u)^T v = -u^T K v,
//
// so that omega_sharp(x) = -x^T K as a row vector. With K = J = (0 I; -I 0)
// this gives omega(f_i, e_i) = 1 and omega(e_i, f_i) = -1. Every matrix
// picture in the odd symplectic module (rho, mu, Omega) relies on this choice.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "affsym/errors.hpp"

namespace affsym {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrixd = Matrix<double>;
using Vectord = Vector<double>;
using RowVectord = RowVector<double>;

/// Tolerance tiers. `alg` is for identities that are exact in exact
/// arithmetic, `fd` (relative) for finite-difference comparisons at `fd_step`.
struct Tolerances {
    double alg = 1e-9;
    double fd = 1e-6;
    double fd_step = 1e-5;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Largest absolute entry; zero for empty matrices.
template <typename Derived>
typename Derived::Scalar max_abs(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    return m.size() == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff();
}

/// Commutator XY - YX.
template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& x, const Eigen::MatrixBase<DerivedB>& y) {
    using Scalar = typename DerivedA::Scalar;
    Matrix<Scalar> out = x * y - y * x;
    return out;
}

/// Nondegenerate skew-symmetric bilinear form on R^dim.
template <typename Scalar>
class SymplecticStructure {
public:
    explicit SymplecticStructure(Matrix<Scalar> form) : form_(std::move(form)), lu_() {
        if (form_.rows() != form_.cols() || form_.rows() == 0 || form_.rows() % 2 != 0) {
            throw PreconditionError("symplectic form must be a non-empty square matrix of even size");
        }
        const Scalar scale = Scalar(1) + max_abs(form_);
        if (max_abs(form_ + form_.transpose()) > Scalar(1e-12) * scale) {
            throw PreconditionError("symplectic form is not skew-symmetric");
        }
        lu_.compute(form_);
        lu_.setThreshold(Scalar(1e-12));
        if (!lu_.isInvertible()) throw PreconditionError("symplectic form is degenerate");
    }

    Index dim() const { return form_.rows(); }
    const Matrix<Scalar>& form() const { return form_; }

    template <typename DU, typename DV>
    Scalar operator()(const Eigen::MatrixBase<DU>& u, const Eigen::MatrixBase<DV>& v) const {
        detail::require_dim(u.size() == dim() && v.size() == dim(), "omega: vector size does not match the form");
        return (form_ * u).dot(v);
    }

    /// Row vector c with c z = scale * omega(x, z) for every z.
    template <typename DX>
    RowVector<Scalar> sharp(const Eigen::MatrixBase<DX>& x, Scalar scale = Scalar(1)) const {
        detail::require_dim(x.size() == dim(), "omega_sharp: vector size does not match the form");
        return -scale * (x.transpose() * form_);
    }

    /// Solves form * y = rhs.
    Vector<Scalar> solve(const Vector<Scalar>& rhs) const { return lu_.solve(rhs); }

private:
    Matrix<Scalar> form_;
    Eigen::FullPivLU<Matrix<Scalar>> lu_;
};

/// J = (0 I_n; -I_n 0) on the basis {e_1..e_n, f_1..f_n}.
template <typename Scalar = double>
Matrix<Scalar> standard_matrix(Index n) {
    if (n < 1) throw PreconditionError("standard_form: n must be at least 1");
    Matrix<Scalar> j = Matrix<Scalar>::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n).setIdentity();
    j.bottomLeftCorner(n, n) = -Matrix<Scalar>::Identity(n, n);
    return j;
}

template <typename Scalar = double>
SymplecticStructure<Scalar> standard_form(Index n) {
    return SymplecticStructure<Scalar>(standard_matrix<Scalar>(n));
}

/// Omega on R^{2n+2} with basis order {e_0, e_1..e_n, f_1..f_n, f_{n+1}}:
/// (0 0 1; 0 J/2 0; -1 0 0).
template <typename Scalar = double>
Matrix<Scalar> big_matrix(Index n) {
    if (n < 1) throw PreconditionError("big_form: n must be at least 1");
    const Index d = 2 * n + 2;
    Matrix<Scalar> omega = Matrix<Scalar>::Zero(d, d);
    omega(0, d - 1) = Scalar(1);
    omega(d - 1, 0) = Scalar(-1);
    omega.block(1, 1, 2 * n, 2 * n) = Scalar(0.5) * standard_matrix<Scalar>(n);
    return omega;
}

template <typename Scalar = double>
SymplecticStructure<Scalar> big_form(Index n) {
    return SymplecticStructure<Scalar>(big_matrix<Scalar>(n));
}

template <typename Scalar, typename DX>
RowVector<Scalar> omega_sharp(const SymplecticStructure<Scalar>& s, const Eigen::MatrixBase<DX>& x,
                              Scalar scale = Scalar(1)) {
    return s.sharp(x, scale);
}

/// max |A^T K A - K| <= tol. Scaling the form does not change membership.
template <typename Scalar, typename DA>
bool is_symplectic(const SymplecticStructure<Scalar>& s, const Eigen::MatrixBase<DA>& a, Scalar tol) {
    detail::require_dim(a.rows() == s.dim() && a.cols() == s.dim(), "is_symplectic: matrix size does not match the form");
    return max_abs(a.transpose() * s.form() * a - s.form()) <= tol;
}

/// max |X^T K + K X| <= tol.
template <typename Scalar, typename DX>
bool is_infinitesimally_symplectic(const SymplecticStructure<Scalar>& s, const Eigen::MatrixBase<DX>& x, Scalar tol) {
    detail::require_dim(x.rows() == s.dim() && x.cols() == s.dim(), "matrix size does not match the form");
    return max_abs(x.transpose() * s.form() + s.form() * x) <= tol;
}

/// exp(X) by scaling and squaring of a truncated Taylor series. The series
/// stops when a term drops below tol relative to the partial sum, or when it
/// vanishes exactly (nilpotent input).
template <typename DX>
Matrix<typename DX::Scalar> mat_exp(const Eigen::MatrixBase<DX>& x,
                                    typename DX::Scalar tol = typename DX::Scalar(1e-16)) {
    using Scalar = typename DX::Scalar;
    if (x.rows() != x.cols()) throw DimensionError("mat_exp: matrix must be square");
    const Index d = x.rows();
    // Induced 1-norm.
    const Scalar norm = d == 0 ? Scalar(0) : x.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > Scalar(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm / Scalar(0.5))));
    const Matrix<Scalar> scaled = x / std::ldexp(Scalar(1), squarings);

    Matrix<Scalar> sum = Matrix<Scalar>::Identity(d, d);
    Matrix<Scalar> term = Matrix<Scalar>::Identity(d, d);
    for (int k = 1; k <= 40; ++k) {
        term = (term * scaled) / Scalar(k);
        const Scalar size = max_abs(term);
        if (size == Scalar(0)) break;
        sum += term;
        if (size <= tol * max_abs(sum)) break;
    }
    for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
    return sum;
}

/// Central-difference gradient of f at v, returned as a row covector.
template <typename Scalar, typename F>
    requires std::invocable<F, const Vector<Scalar>&>
RowVector<Scalar> num_grad(F&& f, const Vector<Scalar>& v, Scalar h) {
    if (!(h > Scalar(0))) throw PreconditionError("num_grad: step must be positive");
    RowVector<Scalar> grad(v.size());
    Vector<Scalar> probe = v;
    for (Index i = 0; i < v.size(); ++i) {
        probe(i) = v(i) + h;
        const Scalar up = f(probe);
        probe(i) = v(i) - h;
        const Scalar down = f(probe);
        probe(i) = v(i);
        grad(i) = (up - down) / (Scalar(2) * h);
    }
    return grad;
}

/// X_f(v) with df(v) w = omega(X_f(v), w); with the form convention above
/// this is K^{-1} grad f.
template <typename Scalar, typename F>
Vector<Scalar> hamiltonian_vf(const SymplecticStructure<Scalar>& s, F&& f, const Vector<Scalar>& v, Scalar h) {
    detail::require_dim(v.size() == s.dim(), "hamiltonian_vf: point dimension does not match the form");
    const RowVector<Scalar> grad = num_grad<Scalar>(std::forward<F>(f), v, h);
    return s.solve(grad.transpose());
}

/// {f, g}(v) = df(v) X_g(v) = omega(X_f(v), X_g(v)).
template <typename Scalar, typename F, typename G>
Scalar poisson_numeric(const SymplecticStructure<Scalar>& s, F&& f, G&& g, const Vector<Scalar>& v, Scalar h) {
    const Vector<Scalar> xf = hamiltonian_vf(s, std::forward<F>(f), v, h);
    const Vector<Scalar> xg = hamiltonian_vf(s, std::forward<G>(g), v, h);
    return s(xf, xg);
}

/// Unit vector of length dim with a one at index i.
template <typename Scalar = double>
Vector<Scalar> unit(Index dim, Index i) {
    Vector<Scalar> e = Vector<Scalar>::Zero(dim);
    e(i) = Scalar(1);
    return e;
}

}  // namespace affsym

#endif  // AFFSYM_LINALG_HPP
