// privacy.hpp — Local differential privacy accounting for quantum channels:
// membership checks, sequential composition, purification of the additive
// slack, and f-divergence bounds under privacy constraints.

#pragma once

#include <span>

#include "hsdp/contraction.hpp"

namespace hsdp {

struct PrivacyParams {
    double epsilon;  // >= 0
    double delta;    // in [0,1]

    double gamma() const { return std::exp(epsilon); }
};

enum class CompositionRule {
    homogeneous_min,
    heterogeneous_zeta,
    eps_delta_power,
    purification,
};

struct CompositionResult {
    double epsilon_out;
    double delta_out;
    CompositionRule rule;
    // Untransformed odds ratio (1 + prod zeta)/(1 - prod zeta) for the
    // heterogeneous rule; equals e^epsilon_out.
    double raw_ratio;
};

// Membership check at gamma = e^eps.
ContainmentCertificate qldp_check(const QuantumChannel& n, double eps, double delta,
                                  const EstimatorBudget& budget = {});

// n-fold self-composition of an (eps, 0)-private channel evaluated at target
// eps': delta' is the smaller of the curve value at t = 1 and the linear
// contraction power.
CompositionResult compose_homogeneous(double eps, int n, double eps_prime);

// Sequential composition of (eps_i, 0)-private channels; exact zero slack at
// the combined odds level.
CompositionResult compose_heterogeneous(std::span<const double> eps_list);

// n-fold composition of an (eps, delta)-private channel at target eps'.
CompositionResult compose_eps_delta(double eps, double delta, int n, double eps_prime);

// Smallest repetition count after which an (eps, delta)-private channel with
// a full-rank fixed point becomes (eps', 0)-private.
long purify_delta(double eps, double delta, double eps_prime, double lambda_min);

// General f-divergence bound; tau is the input trace distance and lambda the
// worst-case minimum output eigenvalue.
double f_div_privacy_bound(const FGenerator& gen, double eps, double delta, double tau,
                           double lambda);

// Relative-entropy specialization in closed form.
double re_ldp_bound(double eps, double delta, double tau, double lambda);

// Prior-work comparison value; m is the caller-supplied truncation mass.
double dasgupta_bound(double eps, double delta, double tau, double m);

}  // namespace hsdp
