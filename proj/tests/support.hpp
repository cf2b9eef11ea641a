#ifndef AFFSYM_TESTS_SUPPORT_HPP
#define AFFSYM_TESTS_SUPPORT_HPP

// Shared fixtures and independent oracles for the unit suites. Nothing here
// calls into the code path it is used to check.

#include <initializer_list>

#include "affsym/affsym.hpp"

namespace affsym::test {

using Mat = Matrixd;
using Vec = Vectord;
using Row = RowVectord;

inline constexpr double kAlg = 1e-9;
inline constexpr double kFd = 1e-6;
inline constexpr double kStep = 1e-5;

inline Mat mat(Index rows, Index cols, std::initializer_list<double> values) {
    Mat m(rows, cols);
    auto it = values.begin();
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

inline Vec vec(std::initializer_list<double> values) {
    Vec v(static_cast<Index>(values.size()));
    Index i = 0;
    for (double x : values) v(i++) = x;
    return v;
}

/// omega(u, v) = sum_ij K_ji u_i v_j, written out entrywise.
inline double omega_entrywise(const Mat& k, const Vec& u, const Vec& v) {
    double sum = 0.0;
    for (Index i = 0; i < u.size(); ++i)
        for (Index j = 0; j < v.size(); ++j) sum += k(j, i) * u(i) * v(j);
    return sum;
}

/// Ad_(A,a)(X, x) = (A X A^{-1}, A x - A X A^{-1} a), derived by hand from the
/// block product.
inline AffineSymplecticAlg<> adjoint_closed_form(const AffineSymplectic<>& g, const AffineSymplecticAlg<>& xi) {
    const Mat a_inv = g.linear().inverse();
    const Mat conj = g.linear() * xi.linear() * a_inv;
    return {conj, g.linear() * xi.translation() - conj * g.translation()};
}

/// Central difference of a matrix-valued curve at 0.
template <typename F>
Mat curve_derivative(F&& f, double h) {
    return (f(h) - f(-h)) / (2.0 * h);
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace affsym::test

#endif  // AFFSYM_TESTS_SUPPORT_HPP
