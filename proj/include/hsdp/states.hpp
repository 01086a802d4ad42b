// states.hpp — Density operators and pure states.

#pragma once

#include "hsdp/matrix.hpp"

namespace hsdp {

// Positive semidefinite, unit-trace operator. Construct through
// validate_density; instances are immutable.
class DensityOperator {
  public:
    const Matrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

  private:
    explicit DensityOperator(Matrix m) : m_(std::move(m)) {}
    friend DensityOperator validate_density(const Matrix&, double, double);
    Matrix m_;
};

// Checks Hermiticity, positivity and unit trace, in that order.
DensityOperator validate_density(const Matrix& m, double eig_tol = kEigTol,
                                 double trace_tol = 1e-10);

// Normalized state vector.
class PureState {
  public:
    explicit PureState(Vector amplitudes, double tol = 1e-10);

    const Vector& amplitudes() const noexcept { return v_; }
    Eigen::Index dim() const noexcept { return v_.size(); }

  private:
    Vector v_;
};

DensityOperator density_from_pure(const PureState& psi);

// |k><k| on a dim-dimensional space.
DensityOperator basis_state(Eigen::Index dim, Eigen::Index k);

DensityOperator maximally_mixed(Eigen::Index dim);

// Diagonal state from a probability vector.
DensityOperator diagonal_state(const Eigen::VectorXd& probs);

}  // namespace hsdp
