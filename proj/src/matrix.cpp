// matrix.cpp — Jacobi eigensolver and spectral helpers.

#include "hsdp/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hsdp {

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex& z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

Hermitian::Hermitian(Matrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
        throw NotHermitian("Hermitian: matrix must be square and non-empty");
    if (!all_finite(m_))
        throw NotHermitian("Hermitian: matrix has non-finite entries");
    const double dev = max_abs(m_ - m_.adjoint());
    if (dev > tol)
        throw NotHermitian("Hermitian: symmetry deviation " + std::to_string(dev) +
                           " exceeds tolerance " + std::to_string(tol));
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    const Eigen::Index n = a.rows();
    for (Eigen::Index q = 0; q < n; ++q)
        for (Eigen::Index p = 0; p < n; ++p)
            if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

}  // namespace

Spectrum eig_hermitian(const Hermitian& h, double tol) {
    const Eigen::Index n = h.dim();
    Matrix a = h.matrix();
    // Work on the exactly Hermitian average; entry drift is within the
    // construction tolerance.
    a = ((a + a.adjoint()) / 2.0).eval();
    Matrix v = Matrix::Identity(n, n);

    const double scale = std::max(1.0, a.norm());
    const double target = 1e-15 * scale;
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) break;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double absg = std::abs(g);
                if (absg <= 1e-300) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const Complex w = g / absg;
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double tau = (beta - alpha) / (2.0 * absg);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // One unitary plane rotation J: columns, then rows, then the
                // accumulated eigenvector matrix.
                const Vector cp = a.col(p), cq = a.col(q);
                a.col(p) = c * cp - s * std::conj(w) * cq;
                a.col(q) = s * w * cp + c * cq;
                const Eigen::RowVectorXcd rp = a.row(p), rq = a.row(q);
                a.row(p) = c * rp - s * w * rq;
                a.row(q) = s * std::conj(w) * rp + c * rq;
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);

                const Vector vp = v.col(p), vq = v.col(q);
                v.col(p) = c * vp - s * std::conj(w) * vq;
                v.col(q) = s * w * vp + c * vq;
            }
        }
    }
    if (sweep == kMaxSweeps && off_diagonal_norm(a) > tol * std::max<double>(1, n) * std::max(1.0, max_abs(h.matrix())))
        throw NoConvergence("eig_hermitian: Jacobi sweep cap exceeded");

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        spec.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
        spec.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return spec;
}

PositivePart positive_part(const Hermitian& h, double tol) {
    const Spectrum spec = eig_hermitian(h, tol);
    const Eigen::Index n = h.dim();
    Matrix p = Matrix::Zero(n, n);
    double trace = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double w = spec.eigenvalues(k);
        if (w >= 0.0) {
            p.noalias() += w * (spec.eigenvectors.col(k) * spec.eigenvectors.col(k).adjoint());
            trace += w;
        }
    }
    p = ((p + p.adjoint()) / 2.0).eval();
    return PositivePart{Hermitian(std::move(p)), trace};
}

double min_eigenvalue(const Hermitian& h, double tol) {
    return eig_hermitian(h, tol).eigenvalues(0);
}

}  // namespace hsdp
