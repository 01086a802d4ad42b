#include "hsdp/states.hpp"

#include <cmath>
#include <string>

namespace hsdp {

DensityOperator validate_density(const Matrix& m, double eig_tol, double trace_tol) {
    Hermitian h(m);  // throws NotHermitian
    const double lo = min_eigenvalue(h, eig_tol);
    if (lo < -eig_tol)
        throw NotPSD("validate_density: minimum eigenvalue " + std::to_string(lo));
    const double tr = h.matrix().trace().real();
    if (std::abs(tr - 1.0) > trace_tol)
        throw BadTrace("validate_density: trace " + std::to_string(tr));
    return DensityOperator(h.matrix());
}

PureState::PureState(Vector amplitudes, double tol) : v_(std::move(amplitudes)) {
    if (v_.size() == 0) throw ValidationError("PureState: empty vector");
    const double n = v_.norm();
    if (std::abs(n - 1.0) > tol)
        throw ValidationError("PureState: norm " + std::to_string(n) + " is not 1");
}

DensityOperator density_from_pure(const PureState& psi) {
    Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
    m = ((m + m.adjoint()) / 2.0).eval();
    m /= m.trace().real();
    return validate_density(m);
}

DensityOperator basis_state(Eigen::Index dim, Eigen::Index k) {
    if (k < 0 || k >= dim) throw BadParameter("basis_state: index out of range");
    Matrix m = Matrix::Zero(dim, dim);
    m(k, k) = 1.0;
    return validate_density(m);
}

DensityOperator maximally_mixed(Eigen::Index dim) {
    if (dim < 1) throw BadParameter("maximally_mixed: dim must be positive");
    return validate_density(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator diagonal_state(const Eigen::VectorXd& probs) {
    Matrix m = Matrix::Zero(probs.size(), probs.size());
    for (Eigen::Index i = 0; i < probs.size(); ++i) m(i, i) = probs(i);
    return validate_density(m);
}

}  // namespace hsdp
