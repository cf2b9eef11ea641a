// Property checks. Each returns the largest residual it saw; the runner
// compares it against the tier tolerance.

#include "checks.hpp"

#include <algorithm>
#include <cmath>

#include "affsym/affsym.hpp"

namespace affsym::verify::detail {
namespace {

using Mat = Matrixd;
using Vec = Vectord;

struct Peak {
    double value = 0.0;
    void operator()(double r) {
        if (std::isnan(r)) r = INFINITY;
        value = std::max(value, r);
    }
};

double rel(double err, double scale) { return err / std::max(1.0, std::abs(scale)); }

template <typename D>
double rel(double err, const Eigen::MatrixBase<D>& scale) {
    return err / std::max(1.0, max_abs(scale));
}

double group_axioms(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto g = s.affine_group(ctx.n), h = s.affine_group(ctx.n), k = s.affine_group(ctx.n);
        const auto e = AffineSymplectic<>::identity(ctx.n);
        peak(max_abs(embed((g * h) * k) - embed(g * (h * k))));
        peak(max_abs(embed(g * e) - embed(g)));
        peak(max_abs(embed(e * g) - embed(g)));
        peak(max_abs(embed(g * inverse(g)) - embed(e)));
        peak(max_abs(embed(inverse(g) * g) - embed(e)));
        peak(max_abs(embed(g * h) - embed(g) * embed(h)));

        const auto x = s.affine_alg(ctx.n), y = s.affine_alg(ctx.n), z = s.affine_alg(ctx.n);
        const auto jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        peak(max_abs(embed_alg(jacobi)));
        peak(max_abs(embed_alg(bracket(x, y)) - commutator(embed_alg(x), embed_alg(y))));
    }
    return peak.value;
}

double action_hamiltonian(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const auto omega = standard_form(ctx.n);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto xi = s.affine_alg(ctx.n);
        const Vec v = s.vector(2 * ctx.n);
        const Vec field = hamiltonian_vf(omega, [&](const Vec& p) { return momentum_component(xi, p); }, v, ctx.fd_step);
        const Vec expected = inf_gen(xi, v);
        peak(rel(max_abs(field - expected), expected));
    }
    return peak.value;
}

double sigma_v_independent(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto g = s.affine_group(ctx.n);
        std::vector<DualElement<double>> values{souriau_cocycle(g)};
        for (int k = 0; k < 5; ++k) values.push_back(souriau_cocycle_at(g, Vec(s.vector(2 * ctx.n))));
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) peak(distance(values[i], values[j]));
        }
    }
    return peak.value;
}

double sigma_cocycle_law(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    peak(max_abs(souriau_cocycle(AffineSymplectic<>::identity(ctx.n)).values()));
    for (long t = 0; t < ctx.trials; ++t) {
        const auto g = s.affine_group(ctx.n), h = s.affine_group(ctx.n);
        peak(distance(souriau_cocycle(g * h), souriau_cocycle(g) + coadjoint(g, souriau_cocycle(h))));
    }
    return peak.value;
}

double poisson_vs_bracket_sigma(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto xi = s.affine_alg(ctx.n), eta = s.affine_alg(ctx.n);
        const Vec v = s.vector(2 * ctx.n);
        peak(std::abs(poisson_analytic(xi, eta, v) - momentum_component(bracket(xi, eta), v) - two_cocycle(xi, eta)));
    }
    return peak.value;
}

double sigma_equals_omega(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto xi = s.affine_alg(ctx.n), eta = s.affine_alg(ctx.n);
        const double exact = two_cocycle(xi, eta);
        peak(rel(std::abs(two_cocycle_from_souriau(xi, eta, ctx.fd_step) - exact), exact));
        peak(std::abs(two_cocycle(xi, eta) + two_cocycle(eta, xi)));
    }
    return peak.value;
}

double sigma_jacobi(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto x = s.affine_alg(ctx.n), y = s.affine_alg(ctx.n), z = s.affine_alg(ctx.n);
        const double lhs = two_cocycle(z, bracket(x, y));
        const double rhs = two_cocycle(bracket(z, x), y) + two_cocycle(x, bracket(z, y));
        peak(std::abs(lhs - rhs));
    }
    return peak.value;
}

double psi_action_law(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const auto basis = afsp_basis(ctx.n);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto g = s.affine_group(ctx.n), h = s.affine_group(ctx.n);
        const auto alpha = s.dual(basis);
        peak(distance(psi_action(g * h, alpha), psi_action(g, psi_action(h, alpha))));
        peak(distance(psi_action(AffineSymplectic<>::identity(ctx.n), alpha), alpha));
    }
    return peak.value;
}

double psi_equivariance(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto g = s.affine_group(ctx.n);
        const Vec w = s.vector(2 * ctx.n);
        peak(distance(psi_action(g, momentum_map(w)), momentum_map(act(g, w))));
    }
    return peak.value;
}

double psi_infinitesimal_check(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const auto basis = afsp_basis(ctx.n);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto xi = s.affine_alg(ctx.n);
        const auto alpha = s.dual(basis);
        const auto closed = psi_infinitesimal_closed(xi, alpha);
        peak(rel(distance(psi_infinitesimal(xi, alpha, ctx.fd_step), closed), closed.values()));
    }
    return peak.value;
}

double ext_jacobi(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    const auto center = ExtendedAlg<>::central_unit(ctx.n);
    for (long t = 0; t < ctx.trials; ++t) {
        const auto x = s.ext_alg(ctx.n), y = s.ext_alg(ctx.n), z = s.ext_alg(ctx.n);
        const Mat jacobi = mu_iso(ext_bracket(x, ext_bracket(y, z))) + mu_iso(ext_bracket(y, ext_bracket(z, x))) +
                           mu_iso(ext_bracket(z, ext_bracket(x, y)));
        peak(max_abs(jacobi));
        peak(max_abs(mu_iso(ext_bracket(center, x))));
        peak(max_abs(mu_iso(ext_bracket(x, center))));
    }
    return peak.value;
}

double ext_group_axioms(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    const auto e = ExtendedGroup<>::identity(ctx.n);
    for (long t = 0; t < ctx.trials; ++t) {
        const auto p = s.ext_group(ctx.n), q = s.ext_group(ctx.n), r = s.ext_group(ctx.n);
        peak(max_abs(rho_embed((p * q) * r) - rho_embed(p * (q * r))));
        peak(max_abs(rho_embed(p * ext_inverse(p)) - rho_embed(e)));
        peak(max_abs(rho_embed(ext_inverse(p) * p) - rho_embed(e)));
        peak(max_abs(rho_embed(p * e) - rho_embed(p)));
        peak(max_abs(rho_embed(e * p) - rho_embed(p)));
    }
    return peak.value;
}

double rho_homomorphism(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto p = s.ext_group(ctx.n), q = s.ext_group(ctx.n);
        peak(max_abs(rho_embed(p * q) - rho_embed(p) * rho_embed(q)));
    }
    return peak.value;
}

double rho_image(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const Mat omega = big_matrix(ctx.n);
    const Index d = 2 * ctx.n + 2;
    const Vec f = unit(d, d - 1);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto p = s.ext_group(ctx.n);
        const Mat m = rho_embed(p);
        peak(max_abs(m.transpose() * omega * m - omega));
        peak(max_abs(m * f - f));
        peak(max_abs(rho_embed(group_from_matrix(m)) - m));
    }
    return peak.value;
}

double mu_isomorphism(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const Mat omega = big_matrix(ctx.n);
    const Index d = 2 * ctx.n + 2;
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto a = s.ext_alg(ctx.n), b = s.ext_alg(ctx.n);
        peak(max_abs(mu_iso(ext_bracket(a, b)) - commutator(mu_iso(a), mu_iso(b))));
        const Mat m = mu_iso(a);
        peak(max_abs(m.transpose() * omega + omega * m));
        peak(max_abs(m.col(d - 1)));
    }
    return peak.value;
}

double drho_equals_mu(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto a = s.ext_alg(ctx.n);
        const Mat exact = mu_iso(a);
        peak(rel(max_abs(d_rho(a, ctx.fd_step) - exact), exact));
    }
    return peak.value;
}

double hat_hamiltonian(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const auto omega = standard_form(ctx.n);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto a = s.ext_alg(ctx.n);
        const Vec w = s.vector(2 * ctx.n);
        const Vec field =
            hamiltonian_vf(omega, [&](const Vec& p) { return hat_momentum_component(a, p); }, w, ctx.fd_step);
        const Vec expected = inf_gen(a.base(), w);
        peak(rel(max_abs(field - expected), expected));
    }
    return peak.value;
}

double hat_equivariance(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const Mat g = rho_embed(s.ext_group(ctx.n));
        const Vec w = s.vector(2 * ctx.n);
        peak(distance(hat_momentum(hat_act(g, w)), coadjoint_matrix(g, hat_momentum(w))));
    }
    return peak.value;
}

double hat_poisson_no_cocycle(const Context& ctx) {
    Sampler<> s(ctx.stream);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const auto a = s.ext_alg(ctx.n), b = s.ext_alg(ctx.n);
        const Vec w = s.vector(2 * ctx.n);
        // Constants do not change Hamiltonian fields, so the bracket of the
        // J-hat components is the bracket of their afsp parts.
        const double poisson = poisson_analytic(a.base(), b.base(), w);
        peak(std::abs(poisson - hat_momentum_component(ext_bracket(a, b), w)));
        const double afsp_residual = poisson - momentum_component(bracket(a.base(), b.base()), w);
        peak(std::abs(afsp_residual - two_cocycle(a.base(), b.base())));
    }
    return peak.value;
}

double moment_e1(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const Index n = ctx.n;
    const auto basis = odd_basis(n);
    const Vec e1 = unit(2 * n, 0);
    const Mat picture = moment_at_e1(n);
    const auto jhat = hat_momentum(e1);
    Peak peak;
    peak(distance(jhat, DualElement<double>::from_frobenius(basis, picture)));
    for (long t = 0; t < ctx.trials; ++t) {
        const auto a = s.ext_alg(n);
        const double expected = 0.5 * a.linear()(n, 0) + a.translation()(n) + a.central();
        peak(std::abs(hat_momentum_component(a, e1) - expected));
        peak(std::abs(pair(jhat, a) - expected));
        peak(std::abs(frobenius(picture, mu_iso(a)) - expected));
    }
    return peak.value;
}

double z_nilpotent(const Context& ctx) {
    const Mat z = orbit_rep(ctx.n);
    double residual = max_abs(Mat(z * z));
    if (max_abs(z) == 0.0) residual = std::max(residual, 1.0);
    if (nilpotent_height(z, 0.0) != 1) residual = std::max(residual, 1.0);
    return residual;
}

double modulus_invariant(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const Mat z = orbit_rep(ctx.n);
    const double base = modulus(z, ctx.n);
    Peak peak;
    peak(std::abs(base - 1.0));
    for (long t = 0; t < ctx.trials; ++t) {
        const Mat p = rho_embed(s.ext_group(ctx.n));
        peak(std::abs(modulus(Mat(p * z * p.inverse()), ctx.n) - base));
    }
    return peak.value;
}

double normalize_corner(const Context& ctx) {
    double residual = 0.0;
    for (double c : normalize_cancellations<double>(ctx.n)) residual = std::max(residual, c);
    const Mat p = build_P(ctx.n);
    const Mat n_form = p * orbit_rep(ctx.n) * p.inverse();
    Mat corner = Mat::Zero(n_form.rows(), n_form.cols());
    corner(0, n_form.cols() - 1) = 1.0;
    return std::max(residual, max_abs(n_form - corner));
}

double classify_orbit(const Context& ctx) {
    const auto z_record = classify(orbit_rep(ctx.n), ctx.n, ctx.tol_alg);
    const auto n_record = classify(normalize(ctx.n).N, ctx.n, ctx.tol_alg);
    double residual = 0.0;
    for (const auto& r : {z_record, n_record}) {
        if (r.kind != CotypeKind::nilpotent || r.height != 1) residual = std::max(residual, 1.0);
        residual = std::max(residual, std::abs(r.modulus - 1.0));
    }
    return residual;
}

double transitivity(const Context& ctx) {
    Sampler<> s(ctx.stream);
    const Vec origin = Vec::Zero(2 * ctx.n);
    Peak peak;
    for (long t = 0; t < ctx.trials; ++t) {
        const Vec w = s.vector(2 * ctx.n);
        peak(max_abs(hat_act(rho_embed(transitivity_witness(w)), origin) - w));
    }
    return peak.value;
}

}  // namespace

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> checks = [] {
        std::vector<CheckSpec> v{
            {"action-hamiltonian", "hamiltonian field of each J^(X,x) equals Xv + x (finite differences)", Tier::fd,
             action_hamiltonian},
            {"classify-orbit", "Z and its normal form classify as nilpotent, height 1, modulus 1", Tier::alg,
             classify_orbit},
            {"drho-equals-mu", "derivative of rho along exp(t a) at t = 0 equals mu(a)", Tier::fd, drho_equals_mu},
            {"ext-group-axioms", "extended group law is associative with two-sided inverses", Tier::alg,
             ext_group_axioms},
            {"ext-jacobi", "extended bracket satisfies Jacobi and (0,0,1) is central", Tier::alg, ext_jacobi},
            {"group-axioms", "AfSp group axioms, embedding multiplicative, afsp Jacobi and matrix commutator",
             Tier::alg, group_axioms},
            {"hat-equivariance", "J-hat(Phi-hat_g w) = Ad^T_{g^-1} J-hat(w)", Tier::alg, hat_equivariance},
            {"hat-hamiltonian", "hamiltonian field of each J-hat component equals Yw + y", Tier::fd, hat_hamiltonian},
            {"hat-poisson-no-cocycle", "{J-hat^a, J-hat^b} = J-hat^[a,b] while the afsp defect equals omega(y,z)",
             Tier::alg, hat_poisson_no_cocycle},
            {"modulus-invariant", "Omega(f, Z f) = 1 and is unchanged by stabilizer conjugation", Tier::alg,
             modulus_invariant},
            {"moment-e1", "J-hat(e_1) pairs to Y_{n+1,1}/2 + y_{n+1} + eta and matches its E*_ij picture",
             Tier::pairing, moment_e1},
            {"mu-isomorphism", "mu[a,b] = [mu a, mu b] with image in sp(Omega) fixing f_{n+1}", Tier::alg,
             mu_isomorphism},
            {"normalize-corner", "P Z P^{-1} = E_{0,2n+1} with the four block cancellations exact", Tier::exact,
             normalize_corner},
            {"poisson-vs-bracket-sigma", "{J^xi, J^eta} = J^[xi,eta] + Sigma(xi,eta)", Tier::alg,
             poisson_vs_bracket_sigma},
            {"psi-action", "Psi_{gh} = Psi_g Psi_h and Psi_e = id", Tier::alg, psi_action_law},
            {"psi-equivariance", "Psi_g(J(w)) = J(Phi_g w)", Tier::alg, psi_equivariance},
            {"psi-infinitesimal", "d/dt Psi_{exp t xi} alpha = -ad^T_xi alpha + (T_e sigma) xi", Tier::fd,
             psi_infinitesimal_check},
            {"rho-homomorphism", "rho(pq) = rho(p) rho(q)", Tier::alg, rho_homomorphism},
            {"rho-image", "rho(p) preserves Omega, fixes f_{n+1}, and inverts through group_from_matrix", Tier::alg,
             rho_image},
            {"sigma-cocycle-law", "sigma(gh) = sigma(g) + Ad^T_{g^-1} sigma(h)", Tier::alg, sigma_cocycle_law},
            {"sigma-equals-omega", "-d/dt sigma(exp t xi)(eta) = omega(x, y), Sigma skew", Tier::fd,
             sigma_equals_omega},
            {"sigma-jacobi", "Sigma(z,[x,y]) = Sigma([z,x],y) + Sigma(x,[z,y])", Tier::alg, sigma_jacobi},
            {"sigma-v-independent", "J(Phi_g v) - Ad^T_{g^-1} J(v) is the same at every v", Tier::alg,
             sigma_v_independent},
            {"transitivity", "(I, w, 0) moves the origin to w", Tier::alg, transitivity},
            {"z-nilpotent", "Z = J-hat(e_1)^T is nonzero with Z^2 = 0 exactly", Tier::exact, z_nilpotent},
        };
        std::sort(v.begin(), v.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.name < b.name; });
        return v;
    }();
    return checks;
}

}  // namespace affsym::verify::detail
