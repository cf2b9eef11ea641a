#ifndef AFFSYM_RANDOM_HPP
#define AFFSYM_RANDOM_HPP

// Seeded samplers for algebra and group elements. Each stream is derived from
// a run seed and a label, so independent consumers never share state.

#include <cstdint>
#include <random>
#include <string_view>

#include "affsym/odd_symplectic.hpp"

namespace affsym {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stream seed for `label` under `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix64(seed ^ mix64(h));
}

template <typename Scalar = double>
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}
    Sampler(std::uint64_t seed, std::string_view label) : engine_(derive_seed(seed, label)) {}

    /// Uniform in [lo, hi). Built from raw 53-bit draws so streams are
    /// identical across standard library implementations.
    Scalar uniform(Scalar lo = Scalar(-1), Scalar hi = Scalar(1)) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * static_cast<Scalar>(u);
    }

    Vector<Scalar> vector(Index dim) {
        Vector<Scalar> v(dim);
        for (Index i = 0; i < dim; ++i) v(i) = uniform();
        return v;
    }

    Matrix<Scalar> symmetric(Index dim) {
        Matrix<Scalar> s(dim, dim);
        for (Index i = 0; i < dim; ++i) {
            for (Index j = i; j < dim; ++j) s(i, j) = s(j, i) = uniform();
        }
        return s;
    }

    /// X = J^{-1} S with S symmetric, entries uniform in [-1, 1].
    Matrix<Scalar> sp_matrix(Index n) { return -standard_matrix<Scalar>(n) * symmetric(2 * n); }

    /// exp(X) for a random sp element rescaled to max-entry 1/2, keeping
    /// group elements well conditioned for absolute tolerances.
    Matrix<Scalar> symplectic_matrix(Index n) {
        Matrix<Scalar> x = sp_matrix(n);
        const Scalar size = max_abs(x);
        if (size > Scalar(0)) x *= Scalar(0.5) / size;
        return mat_exp(x);
    }

    AffineSymplecticAlg<Scalar> affine_alg(Index n) { return {sp_matrix(n), vector(2 * n)}; }
    AffineSymplectic<Scalar> affine_group(Index n) { return {symplectic_matrix(n), vector(2 * n)}; }
    ExtendedAlg<Scalar> ext_alg(Index n) { return {sp_matrix(n), vector(2 * n), uniform()}; }
    ExtendedGroup<Scalar> ext_group(Index n) { return {symplectic_matrix(n), vector(2 * n), uniform()}; }

    /// Functional with uniform values on the basis.
    DualElement<Scalar> dual(const BasisPtr<Scalar>& basis) { return DualElement<Scalar>(basis, vector(basis->size())); }

private:
    std::mt19937_64 engine_;
};

}  // namespace affsym

#endif  // AFFSYM_RANDOM_HPP
