#include "hsdp/divergences.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hsdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest gamma explored before declaring the smoothed divergence infinite.
const double kGammaCap = std::exp(50.0);

void require_same_dim(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim())
        throw DimensionMismatch("divergence: state dimensions " + std::to_string(rho.dim()) +
                                " and " + std::to_string(sigma.dim()) + " differ");
}

// Tr[P_ker(x) y]: mass of y outside the support of x. Equals the large-gamma
// limit of E_gamma(y || x).
double kernel_mass(const DensityOperator& x, const DensityOperator& y) {
    const Spectrum s = eig_hermitian(Hermitian(x.matrix()));
    double mass = 0.0;
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        if (s.eigenvalues(k) <= kEigTol) {
            const Vector v = s.eigenvectors.col(k);
            mass += (v.adjoint() * y.matrix() * v)(0, 0).real();
        }
    }
    return mass;
}

}  // namespace

double hs_divergence(const DensityOperator& rho, const DensityOperator& sigma, double gamma) {
    require_same_dim(rho, sigma);
    if (!(gamma >= 0.0)) throw BadRange("hs_divergence: gamma must be >= 0");
    const Hermitian diff(rho.matrix() - gamma * sigma.matrix());
    const Spectrum spec = eig_hermitian(diff);
    double plus = 0.0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
        if (spec.eigenvalues(k) > 0.0) plus += spec.eigenvalues(k);
    return plus - std::max(0.0, 1.0 - gamma);
}

double hs_classical(const Eigen::VectorXd& p, const Eigen::VectorXd& q, double gamma) {
    if (p.size() != q.size())
        throw DimensionMismatch("hs_classical: distribution lengths differ");
    if (!(gamma >= 1.0)) throw BadRange("hs_classical: gamma must be >= 1");
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) s += std::max(0.0, p(i) - gamma * q(i));
    return s;
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    return hs_divergence(rho, sigma, 1.0);
}

double hs_sym(const DensityOperator& rho, const DensityOperator& sigma, double gamma) {
    return std::max(hs_divergence(rho, sigma, gamma), hs_divergence(sigma, rho, gamma));
}

double d_max(const DensityOperator& rho, const DensityOperator& sigma) {
    require_same_dim(rho, sigma);
    const Spectrum s = eig_hermitian(Hermitian(sigma.matrix()));
    const Eigen::Index d = sigma.dim();

    double kernel_overlap = 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < d; ++k) {
        if (s.eigenvalues(k) <= kEigTol) {
            const Vector v = s.eigenvectors.col(k);
            kernel_overlap += (v.adjoint() * rho.matrix() * v)(0, 0).real();
        } else {
            ++rank;
        }
    }
    if (kernel_overlap > kEigTol) return kInf;

    // lambda_max of sigma^{-1/2} rho sigma^{-1/2} on the support of sigma.
    Matrix u(d, rank);
    Eigen::VectorXd inv_sqrt(rank);
    Eigen::Index c = 0;
    for (Eigen::Index k = 0; k < d; ++k) {
        if (s.eigenvalues(k) > kEigTol) {
            u.col(c) = s.eigenvectors.col(k);
            inv_sqrt(c) = 1.0 / std::sqrt(s.eigenvalues(k));
            ++c;
        }
    }
    Matrix b = u.adjoint() * rho.matrix() * u;
    for (Eigen::Index i = 0; i < rank; ++i)
        for (Eigen::Index j = 0; j < rank; ++j) b(i, j) *= inv_sqrt(i) * inv_sqrt(j);
    b = ((b + b.adjoint()) / 2.0).eval();
    const Spectrum sb = eig_hermitian(Hermitian(std::move(b)));
    return std::log(sb.eigenvalues(rank - 1));
}

double smooth_d_max(const DensityOperator& rho, const DensityOperator& sigma, double delta) {
    require_same_dim(rho, sigma);
    if (delta < 0.0 || delta > 1.0) throw BadRange("smooth_d_max: delta must lie in [0,1]");
    if (hs_divergence(rho, sigma, 1.0) <= delta) return 0.0;

    double hi = 2.0;
    while (hs_divergence(rho, sigma, hi) > delta) {
        hi *= 2.0;
        if (hi > kGammaCap) return kInf;
    }
    double lo = std::max(1.0, hi / 2.0);
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hs_divergence(rho, sigma, mid) <= delta)
            hi = mid;
        else
            lo = mid;
    }
    return std::log(hi);
}

void validate_generator(const FGenerator& gen) {
    if (!gen.f) throw BadParameter("FGenerator: missing f");
    if (std::abs(gen.f(1.0)) > 1e-12)
        throw BadParameter("FGenerator '" + gen.name + "': f(1) != 0");
    if (gen.has_smooth_part()) {
        for (int k = 0; k < 100; ++k) {
            const double x = std::pow(10.0, -3.0 + 6.0 * k / 99.0);
            if (gen.f_second(x) < -1e-9)
                throw BadParameter("FGenerator '" + gen.name + "': f'' < 0 at x = " +
                                   std::to_string(x));
        }
    }
    for (const FGenerator::Atom& atom : gen.atoms)
        if (atom.jump < 0.0 || atom.location <= 0.0)
            throw BadParameter("FGenerator '" + gen.name + "': invalid atom");
}

FGenerator make_kl() {
    FGenerator g;
    g.name = "kl";
    g.f = [](double x) { return x <= 0.0 ? 0.0 : x * std::log(x); };
    g.f_second = [](double x) { return 1.0 / x; };
    g.slope_unbounded_at_inf = true;
    g.unbounded_at_zero = false;
    validate_generator(g);
    return g;
}

FGenerator make_total_variation() {
    FGenerator g;
    g.name = "total_variation";
    g.f = [](double x) { return 0.5 * std::abs(x - 1.0); };
    g.atoms = {{1.0, 1.0}};
    g.slope_unbounded_at_inf = false;
    g.unbounded_at_zero = false;
    validate_generator(g);
    return g;
}

FGenerator make_chi_squared() {
    FGenerator g;
    g.name = "chi2";
    g.f = [](double x) { return (x - 1.0) * (x - 1.0); };
    g.f_second = [](double) { return 2.0; };
    g.slope_unbounded_at_inf = true;
    g.unbounded_at_zero = false;
    validate_generator(g);
    return g;
}

FGenerator make_hockey_stick(double gamma0) {
    if (!(gamma0 >= 1.0)) throw BadParameter("make_hockey_stick: gamma0 must be >= 1");
    FGenerator g;
    g.name = "hockey_stick_" + std::to_string(gamma0);
    g.f = [gamma0](double x) { return std::max(0.0, x - gamma0); };
    g.atoms = {{gamma0, 1.0}};
    g.slope_unbounded_at_inf = false;
    g.unbounded_at_zero = false;
    validate_generator(g);
    return g;
}

namespace {

struct SimpsonState {
    const std::function<double(double)>* fn;
    double tol;
    int max_depth;
};

double simpson_rule(double h, double fa, double fm, double fb) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adaptive_step(const SimpsonState& st, double a, double m, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = (*st.fn)(lm), frm = (*st.fn)(rm);
    const double left = simpson_rule(m - a, fa, flm, fm);
    const double right = simpson_rule(b - m, fm, frm, fb);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol) return left + right + err;
    if (depth >= st.max_depth)
        throw QuadratureFailure("f_divergence: adaptive Simpson depth cap reached");
    return adaptive_step(st, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_step(st, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& fn, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    SimpsonState st{&fn, tol, 48};
    const double m = 0.5 * (a + b);
    const double fa = fn(a), fm = fn(m), fb = fn(b);
    return adaptive_step(st, a, m, b, fa, fm, fb, simpson_rule(b - a, fa, fm, fb), tol, 0);
}

}  // namespace

double f_divergence(const DensityOperator& rho, const DensityOperator& sigma,
                    const FGenerator& gen, double quad_tol) {
    require_same_dim(rho, sigma);
    if (!(quad_tol > 0.0)) throw BadRange("f_divergence: quad_tol must be positive");
    validate_generator(gen);
    if (max_abs(rho.matrix() - sigma.matrix()) <= 1e-14) return 0.0;

    double total = 0.0;

    // Jumps of f' evaluate against the hockey-stick curve directly.
    for (const FGenerator::Atom& atom : gen.atoms) {
        if (atom.location > 1.0) {
            total += atom.jump * hs_divergence(rho, sigma, atom.location);
        } else if (atom.location < 1.0) {
            total += atom.jump * atom.location *
                     hs_divergence(sigma, rho, 1.0 / atom.location);
        } else {
            total += 0.5 * atom.jump *
                     (hs_divergence(rho, sigma, 1.0) + hs_divergence(sigma, rho, 1.0));
        }
    }

    if (!gen.has_smooth_part()) return total;

    const double a = d_max(rho, sigma);
    const double b = d_max(sigma, rho);
    if (std::isinf(a) && gen.slope_unbounded_at_inf) return kInf;
    if (std::isinf(b) && gen.unbounded_at_zero) return kInf;

    // Past this gamma the hockey-stick curve is evaluated by its support
    // limit; the eigenvalue route loses absolute accuracy once gamma
    // approaches 1/eps.
    constexpr double kLimitSwitch = 1e-8;

    // First side: f''(g) E_g(rho||sigma) for g in [1, e^a].
    if (std::isfinite(a)) {
        if (a > 0.0) {
            auto integrand = [&](double g) { return gen.f_second(g) * hs_divergence(rho, sigma, g); };
            total += adaptive_simpson(integrand, 1.0, std::exp(a), quad_tol / 2.0);
        }
    } else {
        // Substituted form u = 1/g with the analytic tail limit.
        const double limit = kernel_mass(sigma, rho);
        auto integrand = [&](double u) {
            const double e = u >= kLimitSwitch ? hs_divergence(rho, sigma, 1.0 / u) : limit;
            return gen.f_second(1.0 / u) * e / (u * u);
        };
        total += adaptive_simpson(integrand, 1e-12, 1.0, quad_tol / 2.0);
    }

    // Second side in the substituted form u = 1/g:
    // integral of u f''(u) E_{1/u}(sigma||rho) over [e^-b, 1].
    {
        const double lo = std::isfinite(b) ? std::exp(-b) : 1e-12;
        const double limit = std::isfinite(b) ? 0.0 : kernel_mass(rho, sigma);
        if (lo < 1.0) {
            auto integrand = [&](double u) {
                const double e = u >= kLimitSwitch ? hs_divergence(sigma, rho, 1.0 / u) : limit;
                return u * gen.f_second(u) * e;
            };
            total += adaptive_simpson(integrand, lo, 1.0, quad_tol / 2.0);
        }
    }

    return total;
}

}  // namespace hsdp
