// channels.hpp — Quantum channels in Kraus form, Choi operators, classical
// channels, composition and fixed points.

#pragma once

#include <vector>

#include "hsdp/states.hpp"

namespace hsdp {

inline constexpr int kKrausProductCap = 4096;

// Completely positive trace-preserving map given by Kraus operators, each
// d_out x d_in. Complete positivity is automatic from the Kraus form; trace
// preservation is checked at construction.
class QuantumChannel {
  public:
    explicit QuantumChannel(std::vector<Matrix> kraus, double tp_tol = 1e-9);

    Eigen::Index d_in() const noexcept { return d_in_; }
    Eigen::Index d_out() const noexcept { return d_out_; }
    const std::vector<Matrix>& kraus() const noexcept { return kraus_; }

  private:
    std::vector<Matrix> kraus_;
    Eigen::Index d_in_, d_out_;
};

// Sum_i K_i rho K_i^dag, revalidated as a density operator.
DensityOperator apply_channel(const QuantumChannel& n, const DensityOperator& rho);

// Same action on an arbitrary operator, no output validation.
Matrix apply_channel_raw(const QuantumChannel& n, const Matrix& x);

// Kraus set of the composition outer . inner is the full product set; throws
// KrausExplosion past the cap (apply the factors one by one instead).
QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner,
                       int cap = kKrausProductCap);

QuantumChannel iterate(const QuantumChannel& n, int power, int cap = kKrausProductCap);

// Choi operator: block convention A (input copy) tensor B (output), entry
// blocks N(|i><j|). PSD with partial trace over B equal to the identity.
struct ChoiOperator {
    Hermitian op;
    Eigen::Index d_in, d_out;
};

ChoiOperator choi(const QuantumChannel& n);

// rho -> (1-p) rho + p I/d, Kraus rank d^2 (Heisenberg-Weyl twirl).
QuantumChannel depolarizing(Eigen::Index d, double p);

// Two-outcome measure-and-prepare map followed by qubit depolarizing noise.
// The measurement projector is fixed at construction as the projector onto
// the nonnegative eigenspace of rho - gamma_prime * sigma.
QuantumChannel achievability_channel(double gamma_prime, const DensityOperator& rho,
                                     const DensityOperator& sigma, double p);

// Unique fixed point of a square channel, found through the vectorized
// transfer matrix. Throws NonUniqueFixedPoint when the eigenvalue-1 space is
// degenerate and NoFixedPointFound when no valid state solves N(s) = s.
DensityOperator fixed_point(const QuantumChannel& n);

// Row-stochastic kernel W(y|x); row x holds the output distribution for x.
class ClassicalChannel {
  public:
    explicit ClassicalChannel(Eigen::MatrixXd w, double row_tol = 1e-12);

    Eigen::Index n_inputs() const noexcept { return w_.rows(); }
    Eigen::Index n_outputs() const noexcept { return w_.cols(); }
    const Eigen::MatrixXd& matrix() const noexcept { return w_; }

  private:
    Eigen::MatrixXd w_;
};

// q(y) = sum_x p(x) W(y|x).
Eigen::VectorXd classical_apply(const ClassicalChannel& w, const Eigen::VectorXd& p,
                                double tol = 1e-12);

// Kraus set {sqrt(W(y|x)) |y><x|}: measures in the input basis, samples the
// kernel, outputs in the computational basis. Diagonal inputs reproduce
// classical_apply exactly.
QuantumChannel embed_classical(const ClassicalChannel& w);

}  // namespace hsdp
