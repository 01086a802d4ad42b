// matrix.hpp — Dense complex linear algebra: Hermitian wrapper, cyclic Jacobi
// eigensolver, positive part, minimum eigenvalue.

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "hsdp/errors.hpp"

namespace hsdp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kEigTol = 1e-10;

// Largest entry magnitude.
double max_abs(const Matrix& m);

bool all_finite(const Matrix& m);

// Square complex matrix certified Hermitian within tolerance at construction.
// Immutable once built.
class Hermitian {
  public:
    explicit Hermitian(Matrix m, double tol = kHermiticityTol);

    const Matrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

  private:
    Matrix m_;
};

// Eigenvalues ascending; eigenvectors as matching columns of a unitary.
// Within a degenerate eigenvalue block the column choice is arbitrary.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;
};

// Full eigendecomposition by cyclic Jacobi rotations. Reconstruction
// V diag(w) V^dag matches the input within tol * dim * max_abs(input).
Spectrum eig_hermitian(const Hermitian& h, double tol = kEigTol);

struct PositivePart {
    Hermitian part;
    double trace;
};

// Zeroes the negative eigenvalues: sum of a_i |i><i| over a_i >= 0.
PositivePart positive_part(const Hermitian& h, double tol = kEigTol);

double min_eigenvalue(const Hermitian& h, double tol = kEigTol);

}  // namespace hsdp
