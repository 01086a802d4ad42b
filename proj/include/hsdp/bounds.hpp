// bounds.hpp — Scalar bound calculators: divergence-order relations, linear
// and non-linear strong data-processing bounds, composition curves, hitting
// times, mixing times, reverse Pinsker forms, and the achievability check.
//
// Natural logarithm throughout; gamma = e^eps links the privacy calculators.

#pragma once

#include <optional>
#include <span>

#include "hsdp/divergences.hpp"

namespace hsdp {

// (x - 1) / (x + 1).
double zeta_ratio(double x);

struct SdpiParams {
    double gamma;        // channel class parameter, >= 1
    double gamma_prime;  // evaluated divergence order, >= 1
    double delta;        // class leakage level, in [0,1]
    double t;            // input divergence value, in [0,1]
};

// Affine relation between divergence orders:
// (gamma - gamma')/(gamma + 1) + (gamma' + 1)/(gamma + 1) * t.
double hs_gamma_relation(double gamma, double gamma_prime, double t);

// True certifies E_gamma = 0 from E_gamma' <= (gamma - gamma') lambda_min.
bool zeroing_criterion(double gamma, double gamma_prime, double lambda_min, double e_val);

// ln(gamma + e_val / lambda_min).
double dmax_upper_from_hs(double gamma, double e_val, double lambda_min);

// max{((gamma - gamma') + delta (gamma' + 1))/(gamma + 1), delta};
// multiplies the input divergence.
double linear_sdpi(double gamma, double gamma_prime, double delta);

// max{((gamma + 2 delta - 1) t - (gamma' - 1)(1 - delta))/(gamma + 1),
//     delta t}; also the composition-curve upper bound.
double nonlinear_sdpi(const SdpiParams& p);

// Heterogeneous sequential composition at delta = 0:
// (t Prod z_i - (gamma'-1)/2 (1 - Prod z_i))_+ with z_i = zeta_ratio(gamma_i).
double f_gamma_hetero(std::span<const double> gammas, double gamma_prime, double t);

// Homogeneous case with n identical factors.
double f_gamma_homog(double gamma, int n, double gamma_prime, double t);

// Scalars of the piecewise composition recursion at delta in (0,1):
//   a = (gamma + 2 delta - 1)/(gamma + 1)
//   b = (gamma' - 1)(1 - delta)/(gamma + 1)        (b/(1-a) = (gamma'-1)/2)
//   t_star = (gamma' - 1)/(gamma - 1)
// k_star and T_star are the first hitting index and value starting from t = 1.
struct HittingTimeParams {
    double gamma, gamma_prime, delta;
    double a, b, t_star;
    int k_star;
    double T_star;
};

HittingTimeParams hitting_params(double gamma, double gamma_prime, double delta);

// Phi_k(t) = a^k (t + b/(1-a)) - b/(1-a).
double phi_k(const HittingTimeParams& hp, double t, int k);

// Smallest k with Phi_k(t) <= t_star.
int k_star(const HittingTimeParams& hp, double t);

// G_n(t) = Phi_n(t) for n <= k_star(t), else delta^(n-k_star) Phi_{k_star}(t).
double g_n(const HittingTimeParams& hp, double t, int n);

// ceil(ln((gamma'+1)/(2 beta + gamma'-1)) / ln((gamma+1)/(gamma-1))),
// clamped to 0. Finite even at beta = 0.
long mixing_time_nonlinear(double gamma, double gamma_prime, double beta);

// ceil(ln(1/beta) / ln((gamma+1)/(gamma-gamma'+(1+gamma') delta))); empty at
// beta = 0 (the linear route never reaches zero divergence).
std::optional<long> mixing_time_linear(double gamma, double gamma_prime, double delta,
                                       double beta);

// k_star + (ceil(ln(beta/T_star)/ln(delta)))_+ at t = 1.
long mixing_time_delta(double gamma, double gamma_prime, double delta, double beta);

enum class FullRankHypothesis {
    gamma_plus_one,   // (gamma'+1) lambda_min <= 1 held
    gamma_minus_one,  // only (gamma'-1) lambda_min <= 1 held
};

struct FullRankMixing {
    long steps;
    FullRankHypothesis hypothesis;
};

// ceil(ln((gamma'-1) lambda_min) / ln(zeta_ratio(e^a))) for channels whose
// outputs all share support; reports which hypothesis range applied.
FullRankMixing mixing_time_full_rank(double a, double gamma_prime, double lambda_min);

// Chord bound from convexity in the order parameter.
double hs_convexity_bound(double gamma, double gamma1, double gamma2, double e1, double e2);

// Four-term f-divergence bound under E_{g1}(rho||sigma) <= d1,
// E_{g2}(sigma||rho) <= d2, E_1 <= tau, with a and b the two max-relative
// entropies. Removable singularities are evaluated by their limits.
double reverse_pinsker_general(const FGenerator& gen, double gamma1, double gamma2,
                               double delta1, double delta2, double tau, double a, double b);

// Symmetric-constraint special case.
double reverse_pinsker_sym(const FGenerator& gen, double gamma, double delta, double a, double b);

struct TightnessReport {
    double input_divergence;  // measured E_gamma'(rho||sigma)
    double flip_probability;  // depolarizing parameter used
    double channel_value;
    double bound_value;
    double gap;
    bool in_regime;  // equality is only promised inside the regime
    bool passed;     // gap <= tol
};

// Builds the equality-achieving channel with p = 2(1-delta)/(gamma+1) and
// compares the measured output divergence against the non-linear bound.
TightnessReport tightness_check(double gamma, double gamma_prime, double delta,
                                const DensityOperator& rho, const DensityOperator& sigma,
                                double tol);

}  // namespace hsdp
