// divergences.hpp — Hockey-stick divergence family, max-relative entropy and
// its smoothed variant, and the hockey-stick-integral f-divergences.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hsdp/states.hpp"

namespace hsdp {

// E_gamma(rho||sigma) = Tr[(rho - gamma sigma)_+] - (1 - gamma)_+, gamma >= 0.
double hs_divergence(const DensityOperator& rho, const DensityOperator& sigma, double gamma);

// Classical evaluation sum_x max{0, p(x) - gamma q(x)} for gamma >= 1.
double hs_classical(const Eigen::VectorXd& p, const Eigen::VectorXd& q, double gamma);

// E_1; equals half the trace norm of the difference.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// max{E_gamma(rho||sigma), E_gamma(sigma||rho)}.
double hs_sym(const DensityOperator& rho, const DensityOperator& sigma, double gamma);

// ln inf{lambda : rho <= lambda sigma}; +infinity when the support of rho is
// not contained in the support of sigma.
double d_max(const DensityOperator& rho, const DensityOperator& sigma);

// ln of the smallest gamma >= 1 with E_gamma <= delta, by bisection; clamped
// to 0 when delta >= E_1, +infinity when no gamma below exp(50) works.
double smooth_d_max(const DensityOperator& rho, const DensityOperator& sigma, double delta);

// Convex generator f with f(1) = 0. The distributional part of f'' (jumps of
// f') is carried separately as atoms so piecewise-linear generators evaluate
// exactly: an atom of weight J at x0 > 1 contributes J * E_{x0}(rho||sigma),
// at x0 < 1 it contributes J * x0 * E_{1/x0}(sigma||rho), and at x0 = 1 half
// of each.
struct FGenerator {
    struct Atom {
        double location;
        double jump;
    };

    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> f_second;  // smooth part; may be empty
    std::vector<Atom> atoms;
    bool slope_unbounded_at_inf = true;  // f'(x) -> infinity as x -> infinity
    bool unbounded_at_zero = false;      // f(x) -> infinity as x -> 0+

    bool has_smooth_part() const { return static_cast<bool>(f_second); }
};

// f(1) = 0 within 1e-12 and sampled convexity of the smooth part.
void validate_generator(const FGenerator& gen);

FGenerator make_kl();                       // x ln x
FGenerator make_total_variation();          // |x-1|/2
FGenerator make_chi_squared();              // (x-1)^2
FGenerator make_hockey_stick(double gamma0);  // (x-gamma0)_+, gamma0 >= 1

enum class Method { closed_form, bisection, quadrature };

struct DivergenceValue {
    double value;
    Method method;
};

// Integral of f''(g) E_g(rho||sigma) + g^-3 f''(1/g) E_g(sigma||rho) over
// g >= 1, truncated where both hockey-stick curves vanish, plus the atom
// terms. Adaptive Simpson with absolute error <= quad_tol on the smooth part.
double f_divergence(const DensityOperator& rho, const DensityOperator& sigma,
                    const FGenerator& gen, double quad_tol = 1e-8);

}  // namespace hsdp
