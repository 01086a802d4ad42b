#include "hsdp/bounds.hpp"

#include <cmath>

#include "hsdp/channels.hpp"

namespace hsdp {

namespace {

void check_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw BadRange(std::string(name) + " must lie in [0,1]");
}

// Ceiling with a small slack so ratios of logarithms landing on an integer
// up to roundoff do not get pushed one step up.
long clamped_ceil(double x) {
    const double c = std::ceil(x - 1e-9);
    return c <= 0.0 ? 0L : static_cast<long>(c);
}

// f'(x) by central difference; used only at removable singularities.
double derivative(const std::function<double(double)>& f, double x) {
    const double h = 1e-6;
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// (f(y) - f(x)) / (y - x) with the confluent limit f'(x).
double chord(const std::function<double(double)>& f, double y, double x) {
    if (std::abs(y - x) < 1e-9) return derivative(f, x);
    return (f(y) - f(x)) / (y - x);
}

}  // namespace

double zeta_ratio(double x) { return (x - 1.0) / (x + 1.0); }

double hs_gamma_relation(double gamma, double gamma_prime, double t) {
    if (!(1.0 <= gamma_prime && gamma_prime <= gamma))
        throw BadRange("hs_gamma_relation: need 1 <= gamma' <= gamma");
    check_unit(t, "hs_gamma_relation: t");
    return (gamma - gamma_prime) / (gamma + 1.0) +
           (gamma_prime + 1.0) / (gamma + 1.0) * t;
}

bool zeroing_criterion(double gamma, double gamma_prime, double lambda_min, double e_val) {
    if (!(gamma >= gamma_prime && gamma_prime >= 1.0))
        throw BadRange("zeroing_criterion: need gamma >= gamma' >= 1");
    check_unit(lambda_min, "zeroing_criterion: lambda_min");
    check_unit(e_val, "zeroing_criterion: e_val");
    return e_val <= (gamma - gamma_prime) * lambda_min;
}

double dmax_upper_from_hs(double gamma, double e_val, double lambda_min) {
    if (!(gamma >= 1.0)) throw BadRange("dmax_upper_from_hs: gamma must be >= 1");
    check_unit(e_val, "dmax_upper_from_hs: e_val");
    if (!(lambda_min > 0.0)) throw ZeroLambdaMin("dmax_upper_from_hs: lambda_min must be > 0");
    return std::log(gamma + e_val / lambda_min);
}

double linear_sdpi(double gamma, double gamma_prime, double delta) {
    if (!(gamma >= 1.0 && gamma_prime >= 1.0))
        throw BadRange("linear_sdpi: need gamma, gamma' >= 1");
    check_unit(delta, "linear_sdpi: delta");
    const double first = ((gamma - gamma_prime) + delta * (gamma_prime + 1.0)) / (gamma + 1.0);
    return std::max(first, delta);
}

double nonlinear_sdpi(const SdpiParams& p) {
    if (!(p.gamma >= 1.0 && p.gamma_prime >= 1.0))
        throw BadRange("nonlinear_sdpi: need gamma, gamma' >= 1");
    check_unit(p.delta, "nonlinear_sdpi: delta");
    check_unit(p.t, "nonlinear_sdpi: t");
    const double first = ((p.gamma + 2.0 * p.delta - 1.0) * p.t -
                          (p.gamma_prime - 1.0) * (1.0 - p.delta)) /
                         (p.gamma + 1.0);
    return std::max(first, p.delta * p.t);
}

double f_gamma_hetero(std::span<const double> gammas, double gamma_prime, double t) {
    if (gammas.empty()) throw BadRange("f_gamma_hetero: empty channel list");
    if (!(gamma_prime >= 1.0)) throw BadRange("f_gamma_hetero: gamma' must be >= 1");
    check_unit(t, "f_gamma_hetero: t");
    double prod = 1.0;
    for (double g : gammas) {
        if (!(g >= gamma_prime))
            throw BadRange("f_gamma_hetero: every gamma_i must satisfy gamma_i >= gamma'");
        prod *= zeta_ratio(g);
    }
    return std::max(0.0, t * prod - 0.5 * (gamma_prime - 1.0) * (1.0 - prod));
}

double f_gamma_homog(double gamma, int n, double gamma_prime, double t) {
    if (n < 1) throw BadRange("f_gamma_homog: n must be >= 1");
    if (!(gamma >= gamma_prime && gamma_prime >= 1.0))
        throw BadRange("f_gamma_homog: need gamma >= gamma' >= 1");
    check_unit(t, "f_gamma_homog: t");
    const double prod = std::pow(zeta_ratio(gamma), n);
    return std::max(0.0, t * prod - 0.5 * (gamma_prime - 1.0) * (1.0 - prod));
}

HittingTimeParams hitting_params(double gamma, double gamma_prime, double delta) {
    if (!(1.0 < gamma_prime && gamma_prime < gamma))
        throw BadRange("hitting_params: need 1 < gamma' < gamma");
    if (!(delta > 0.0 && delta < 1.0))
        throw BadRange("hitting_params: delta must lie strictly in (0,1)");
    HittingTimeParams hp;
    hp.gamma = gamma;
    hp.gamma_prime = gamma_prime;
    hp.delta = delta;
    hp.a = (gamma + 2.0 * delta - 1.0) / (gamma + 1.0);
    hp.b = (gamma_prime - 1.0) * (1.0 - delta) / (gamma + 1.0);
    hp.t_star = (gamma_prime - 1.0) / (gamma - 1.0);
    hp.k_star = k_star(hp, 1.0);
    hp.T_star = phi_k(hp, 1.0, hp.k_star);
    return hp;
}

double phi_k(const HittingTimeParams& hp, double t, int k) {
    if (k < 0) throw BadRange("phi_k: k must be >= 0");
    const double shift = hp.b / (1.0 - hp.a);
    return std::pow(hp.a, k) * (t + shift) - shift;
}

int k_star(const HittingTimeParams& hp, double t) {
    check_unit(t, "k_star: t");
    if (phi_k(hp, t, 0) <= hp.t_star) return 0;
    // Closed-form initializer, then exact fixup of the ceiling boundary.
    const double ratio = (hp.t_star * (1.0 - hp.a) + hp.b) / (t * (1.0 - hp.a) + hp.b);
    int k = std::max(0, static_cast<int>(std::ceil(std::log(ratio) / std::log(hp.a))));
    while (phi_k(hp, t, k) > hp.t_star) ++k;
    while (k > 0 && phi_k(hp, t, k - 1) <= hp.t_star) --k;
    return k;
}

double g_n(const HittingTimeParams& hp, double t, int n) {
    if (n < 1) throw BadRange("g_n: n must be >= 1");
    const int ks = k_star(hp, t);
    if (n <= ks) return phi_k(hp, t, n);
    return std::pow(hp.delta, n - ks) * phi_k(hp, t, ks);
}

long mixing_time_nonlinear(double gamma, double gamma_prime, double beta) {
    if (!(gamma >= gamma_prime && gamma_prime > 1.0))
        throw BadRange("mixing_time_nonlinear: need gamma >= gamma' > 1");
    check_unit(beta, "mixing_time_nonlinear: beta");
    const double num = std::log((gamma_prime + 1.0) / (2.0 * beta + gamma_prime - 1.0));
    const double den = std::log((gamma + 1.0) / (gamma - 1.0));
    return clamped_ceil(num / den);
}

std::optional<long> mixing_time_linear(double gamma, double gamma_prime, double delta,
                                       double beta) {
    if (!(gamma >= gamma_prime && gamma_prime > 1.0))
        throw BadRange("mixing_time_linear: need gamma >= gamma' > 1");
    check_unit(delta, "mixing_time_linear: delta");
    check_unit(beta, "mixing_time_linear: beta");
    const double rate = (gamma - gamma_prime + (1.0 + gamma_prime) * delta) / (gamma + 1.0);
    if (rate >= 1.0)
        throw ContractionNotStrict("mixing_time_linear: contraction rate is not below 1");
    if (beta == 0.0) return std::nullopt;
    return clamped_ceil(std::log(1.0 / beta) / std::log(1.0 / rate));
}

long mixing_time_delta(double gamma, double gamma_prime, double delta, double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw BadRange("mixing_time_delta: beta must lie strictly in (0,1)");
    const HittingTimeParams hp = hitting_params(gamma, gamma_prime, delta);
    const long tail = clamped_ceil(std::log(beta / hp.T_star) / std::log(delta));
    return hp.k_star + tail;
}

FullRankMixing mixing_time_full_rank(double a, double gamma_prime, double lambda_min) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw BadRange("mixing_time_full_rank: a must be positive and finite");
    if (!(lambda_min > 0.0))
        throw BadRange("mixing_time_full_rank: lambda_min must be > 0");
    const double arg = (gamma_prime - 1.0) * lambda_min;
    if (!(arg > 0.0 && arg < 1.0))
        throw BadRange("mixing_time_full_rank: (gamma'-1) lambda_min must lie in (0,1)");
    FullRankMixing out;
    out.steps = clamped_ceil(std::log(arg) / std::log(zeta_ratio(std::exp(a))));
    out.hypothesis = (gamma_prime + 1.0) * lambda_min <= 1.0 ? FullRankHypothesis::gamma_plus_one
                                                             : FullRankHypothesis::gamma_minus_one;
    return out;
}

double hs_convexity_bound(double gamma, double gamma1, double gamma2, double e1, double e2) {
    if (!(1.0 <= gamma1 && gamma1 <= gamma && gamma <= gamma2))
        throw BadRange("hs_convexity_bound: need 1 <= gamma1 <= gamma <= gamma2");
    check_unit(e1, "hs_convexity_bound: e1");
    check_unit(e2, "hs_convexity_bound: e2");
    if (gamma1 == gamma2) return e1;  // all three coincide under the range check
    return (gamma - gamma2) / (gamma1 - gamma2) * e1 +
           (gamma1 - gamma) / (gamma1 - gamma2) * e2;
}

double reverse_pinsker_general(const FGenerator& gen, double gamma1, double gamma2,
                               double delta1, double delta2, double tau, double a, double b) {
    if (!(gamma1 >= 1.0 && gamma2 >= 1.0))
        throw BadRange("reverse_pinsker_general: need gamma1, gamma2 >= 1");
    check_unit(delta1, "reverse_pinsker_general: delta1");
    check_unit(delta2, "reverse_pinsker_general: delta2");
    check_unit(tau, "reverse_pinsker_general: tau");
    const double ea = std::exp(a), eb = std::exp(b);
    if (ea < gamma1 - 1e-12 || eb < gamma2 - 1e-12)
        throw BadRange("reverse_pinsker_general: need e^a >= gamma1 and e^b >= gamma2");
    validate_generator(gen);
    const auto& f = gen.f;
    auto f_inv = [&f](double x) { return f(1.0 / x); };

    // f(g1) (tau - d1)/(g1 - 1), with the g1 -> 1 limit f'(1) (tau - d1).
    const double t1 = chord(f, gamma1, 1.0) * (tau - delta1);
    const double t2 = delta1 * chord(f, ea, gamma1);
    // f(1/g2) (g2 tau - d2)/(g2 - 1) -> -f'(1) (tau - d2) as g2 -> 1.
    const double t3 = std::abs(gamma2 - 1.0) < 1e-9
                          ? -derivative(f, 1.0) * (tau - delta2)
                          : f(1.0 / gamma2) * (gamma2 * tau - delta2) / (gamma2 - 1.0);
    const double t4 = eb * delta2 * chord(f_inv, eb, gamma2);
    return t1 + t2 + t3 + t4;
}

double reverse_pinsker_sym(const FGenerator& gen, double gamma, double delta, double a,
                           double b) {
    if (!(gamma >= 1.0)) throw BadRange("reverse_pinsker_sym: gamma must be >= 1");
    check_unit(delta, "reverse_pinsker_sym: delta");
    const double ea = std::exp(a), eb = std::exp(b);
    if (ea < gamma - 1e-12 || eb < gamma - 1e-12)
        throw BadRange("reverse_pinsker_sym: need e^a and e^b >= gamma");
    validate_generator(gen);
    const auto& f = gen.f;
    auto f_inv = [&f](double x) { return f(1.0 / x); };

    const double base =
        ((gamma + delta) * f(1.0 / gamma) + (1.0 - delta) * f(gamma)) / (gamma + 1.0);
    const double correction = eb * chord(f_inv, eb, gamma) + chord(f, ea, gamma);
    return base + correction * delta;
}

TightnessReport tightness_check(double gamma, double gamma_prime, double delta,
                                const DensityOperator& rho, const DensityOperator& sigma,
                                double tol) {
    if (!(gamma >= 1.0 && gamma_prime >= 1.0))
        throw BadRange("tightness_check: need gamma, gamma' >= 1");
    check_unit(delta, "tightness_check: delta");

    TightnessReport report;
    report.input_divergence = hs_divergence(rho, sigma, gamma_prime);
    report.flip_probability = 2.0 * (1.0 - delta) / (gamma + 1.0);

    // Equality is promised at delta = 0, and for delta > 0 whenever the
    // affine branch dominates: t >= (gamma'-1)/(gamma-1).
    report.in_regime =
        delta == 0.0 ||
        (gamma > 1.0 &&
         report.input_divergence >= (gamma_prime - 1.0) / (gamma - 1.0) - 1e-12);

    const QuantumChannel achiever =
        achievability_channel(gamma_prime, rho, sigma, report.flip_probability);
    report.channel_value = hs_divergence(apply_channel(achiever, rho),
                                         apply_channel(achiever, sigma), gamma_prime);
    report.bound_value =
        nonlinear_sdpi({gamma, gamma_prime, delta, report.input_divergence});
    report.gap = std::abs(report.channel_value - report.bound_value);
    report.passed = report.gap <= tol;
    return report;
}

}  // namespace hsdp
