#include "hsdp/privacy.hpp"

#include <cmath>

#include "hsdp/bounds.hpp"

namespace hsdp {

ContainmentCertificate qldp_check(const QuantumChannel& n, double eps, double delta,
                                  const EstimatorBudget& budget) {
    if (!(eps >= 0.0)) throw BadRange("qldp_check: eps must be >= 0");
    return containment_check(n, std::exp(eps), delta, budget);
}

CompositionResult compose_homogeneous(double eps, int n, double eps_prime) {
    if (!(eps_prime > 0.0 && eps_prime <= eps))
        throw BadRange("compose_homogeneous: need 0 < eps' <= eps");
    if (n < 1) throw BadRange("compose_homogeneous: n must be >= 1");
    const double zn = std::pow(zeta_ratio(std::exp(eps)), n);
    const double ep = std::exp(eps_prime);
    const double curve = 0.5 * std::max(0.0, zn * (ep + 1.0) + 1.0 - ep);
    const double linear = std::pow((std::exp(eps) - ep) / (std::exp(eps) + 1.0), n);
    return {eps_prime, std::min(curve, linear), CompositionRule::homogeneous_min, 0.0};
}

CompositionResult compose_heterogeneous(std::span<const double> eps_list) {
    if (eps_list.empty()) throw BadRange("compose_heterogeneous: empty list");
    double prod = 1.0;
    for (double e : eps_list) {
        if (!(e >= 0.0)) throw BadRange("compose_heterogeneous: eps must be >= 0");
        prod *= zeta_ratio(std::exp(e));
    }
    const double ratio = (1.0 + prod) / (1.0 - prod);
    return {std::log(ratio), 0.0, CompositionRule::heterogeneous_zeta, ratio};
}

CompositionResult compose_eps_delta(double eps, double delta, int n, double eps_prime) {
    if (!(eps_prime <= eps)) throw BadRange("compose_eps_delta: need eps' <= eps");
    if (!(eps_prime >= 0.0)) throw BadRange("compose_eps_delta: eps' must be >= 0");
    if (delta < 0.0 || delta > 1.0) throw BadRange("compose_eps_delta: delta must lie in [0,1]");
    if (n < 1) throw BadRange("compose_eps_delta: n must be >= 1");
    const double e = std::exp(eps), ep = std::exp(eps_prime);
    const double step = ((e - ep) + delta * (ep + 1.0)) / (e + 1.0);
    return {eps_prime, std::pow(step, n), CompositionRule::eps_delta_power, 0.0};
}

long purify_delta(double eps, double delta, double eps_prime, double lambda_min) {
    if (!(eps > 0.0)) throw BadRange("purify_delta: eps must be > 0");
    if (!(delta > 0.0 && delta < 1.0))
        throw BadRange("purify_delta: delta must lie strictly in (0,1)");
    if (!(eps_prime > 0.0 && eps_prime < eps))
        throw BadRange("purify_delta: need 0 < eps' < eps");
    if (!(lambda_min > 0.0))
        throw FixedPointNotFullRank("purify_delta: fixed point must be full rank");
    if (!(lambda_min <= 1.0)) throw BadRange("purify_delta: lambda_min must lie in (0,1]");
    const double f = (std::exp(eps) - 1.0 + 2.0 * delta) / (std::exp(eps) + 1.0);
    const double arg1 = (std::exp(eps_prime) - 1.0) * lambda_min / 2.0;
    const double arg2 = lambda_min / 2.0;
    if (!(arg1 > 0.0 && arg1 < 1.0 && arg2 > 0.0 && arg2 < 1.0))
        throw BadRange("purify_delta: log arguments must lie in (0,1)");
    const double bound = std::max(std::log(arg1) / std::log(f), std::log(arg2) / std::log(f));
    // Ties at integers stay put; roundoff above an integer must not bump n.
    const long n = static_cast<long>(std::ceil(bound - 1e-9));
    return n < 1 ? 1 : n;
}

double f_div_privacy_bound(const FGenerator& gen, double eps, double delta, double tau,
                           double lambda) {
    if (!(eps > 0.0)) throw BadRange("f_div_privacy_bound: eps must be > 0");
    if (delta < 0.0 || delta > 1.0 || tau < 0.0 || tau > 1.0)
        throw BadRange("f_div_privacy_bound: delta and tau must lie in [0,1]");
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw BadRange("f_div_privacy_bound: lambda must lie in (0,1]");
    validate_generator(gen);
    const auto& f = gen.f;
    const double e = std::exp(eps);
    const double g = e + delta / lambda;
    const double first =
        (f(e) + e * f(1.0 / e)) / (e - 1.0) * (e - 1.0 + 2.0 * delta) / (e + 1.0) * tau;
    const double second = -(f(e) + f(1.0 / e)) / (e - 1.0) * delta;
    const double third =
        lambda * (f(g) - f(e) + g * f(1.0 / g) - g * f(1.0 / e));
    return first + second + third;
}

double re_ldp_bound(double eps, double delta, double tau, double lambda) {
    if (!(eps > 0.0)) throw BadRange("re_ldp_bound: eps must be > 0");
    if (delta < 0.0 || delta > 1.0 || tau < 0.0 || tau > 1.0)
        throw BadRange("re_ldp_bound: delta and tau must lie in [0,1]");
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw BadRange("re_ldp_bound: lambda must lie in (0,1]");
    const double e = std::exp(eps);
    const double g = e + delta / lambda;
    const double first = eps * (e - 1.0 + 2.0 * delta) / (e + 1.0) * tau;
    const double second = -eps * (e - 1.0 / e) / (e - 1.0) * delta;
    const double third =
        lambda * ((g - 1.0) * std::log(g) + (1.0 - e + (delta / lambda) / e) * eps);
    return first + second + third;
}

double dasgupta_bound(double eps, double delta, double tau, double m) {
    if (!(eps > 0.0)) throw BadRange("dasgupta_bound: eps must be > 0");
    if (delta < 0.0 || delta >= 1.0)
        throw BadRange("dasgupta_bound: delta must lie in [0,1)");
    if (tau < 0.0 || tau > 1.0) throw BadRange("dasgupta_bound: tau must lie in [0,1]");
    if (!(m > 0.0 && m <= 1.0)) throw BadRange("dasgupta_bound: m must lie in (0,1]");
    const double e = std::exp(eps);
    const double log_inv = std::log(1.0 / (1.0 - delta));
    const double tau_coeff = eps * (e - 1.0 + 2.0 * delta) / (e + 1.0) +
                             delta * ((e + delta - 1.0) / e + log_inv);
    const double additive =
        delta * (e / (1.0 - delta) - (1.0 - delta) / e + 4.0 * (eps + log_inv + 1.0 / m));
    return tau_coeff * tau + additive;
}

}  // namespace hsdp
