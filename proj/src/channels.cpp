#include "hsdp/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace hsdp {

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus, double tp_tol)
    : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw ValidationError("QuantumChannel: empty Kraus list");
    d_out_ = kraus_.front().rows();
    d_in_ = kraus_.front().cols();
    if (d_in_ < 1 || d_out_ < 1)
        throw ValidationError("QuantumChannel: Kraus operators must be non-empty");
    Matrix acc = Matrix::Zero(d_in_, d_in_);
    for (const Matrix& k : kraus_) {
        if (k.rows() != d_out_ || k.cols() != d_in_)
            throw DimensionMismatch("QuantumChannel: inconsistent Kraus shapes");
        if (!all_finite(k))
            throw ValidationError("QuantumChannel: non-finite Kraus entries");
        acc.noalias() += k.adjoint() * k;
    }
    const double dev = max_abs(acc - Matrix::Identity(d_in_, d_in_));
    if (dev > tp_tol)
        throw ValidationError("QuantumChannel: trace preservation violated by " +
                              std::to_string(dev));
}

Matrix apply_channel_raw(const QuantumChannel& n, const Matrix& x) {
    if (x.rows() != n.d_in() || x.cols() != n.d_in())
        throw DimensionMismatch("apply_channel: state dimension " + std::to_string(x.rows()) +
                                " does not match channel input " + std::to_string(n.d_in()));
    Matrix out = Matrix::Zero(n.d_out(), n.d_out());
    for (const Matrix& k : n.kraus()) out.noalias() += k * x * k.adjoint();
    return out;
}

DensityOperator apply_channel(const QuantumChannel& n, const DensityOperator& rho) {
    Matrix out = apply_channel_raw(n, rho.matrix());
    out = ((out + out.adjoint()) / 2.0).eval();
    return validate_density(out);
}

QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner, int cap) {
    if (inner.d_out() != outer.d_in())
        throw DimensionMismatch("compose: inner output " + std::to_string(inner.d_out()) +
                                " does not match outer input " + std::to_string(outer.d_in()));
    const std::size_t count = outer.kraus().size() * inner.kraus().size();
    if (count > static_cast<std::size_t>(cap))
        throw KrausExplosion("compose: " + std::to_string(count) + " Kraus products exceed cap " +
                             std::to_string(cap));
    std::vector<Matrix> prod;
    prod.reserve(count);
    for (const Matrix& ko : outer.kraus())
        for (const Matrix& ki : inner.kraus()) prod.push_back(ko * ki);
    return QuantumChannel(std::move(prod));
}

QuantumChannel iterate(const QuantumChannel& n, int power, int cap) {
    if (power < 1) throw BadParameter("iterate: power must be >= 1");
    if (n.d_in() != n.d_out()) throw DimensionMismatch("iterate: channel must be square");
    QuantumChannel out = n;
    for (int i = 1; i < power; ++i) out = compose(n, out, cap);
    return out;
}

ChoiOperator choi(const QuantumChannel& n) {
    const Eigen::Index di = n.d_in(), dj = n.d_out();
    Matrix gamma = Matrix::Zero(di * dj, di * dj);
    Matrix eij = Matrix::Zero(di, di);
    for (Eigen::Index i = 0; i < di; ++i) {
        for (Eigen::Index j = 0; j < di; ++j) {
            eij(i, j) = 1.0;
            gamma.block(i * dj, j * dj, dj, dj) = apply_channel_raw(n, eij);
            eij(i, j) = 0.0;
        }
    }
    gamma = ((gamma + gamma.adjoint()) / 2.0).eval();
    return ChoiOperator{Hermitian(std::move(gamma)), di, dj};
}

QuantumChannel depolarizing(Eigen::Index d, double p) {
    if (d < 2) throw BadParameter("depolarizing: dimension must be >= 2");
    if (p < 0.0 || p > 1.0) throw BadParameter("depolarizing: p must lie in [0,1]");

    // Heisenberg-Weyl twirl: averaging over X^a Z^b replaces the state by I/d.
    std::vector<Matrix> kraus;
    kraus.reserve(static_cast<std::size_t>(d * d));
    const double dd = static_cast<double>(d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            Matrix u = Matrix::Zero(d, d);
            for (Eigen::Index j = 0; j < d; ++j) {
                const double phase = 2.0 * std::numbers::pi * static_cast<double>(b * j) / dd;
                u((j + a) % d, j) = std::exp(Complex(0.0, phase));
            }
            const double weight = (a == 0 && b == 0) ? (1.0 - p + p / (dd * dd)) : p / (dd * dd);
            kraus.push_back(std::sqrt(weight) * u);
        }
    }
    return QuantumChannel(std::move(kraus));
}

QuantumChannel achievability_channel(double gamma_prime, const DensityOperator& rho,
                                     const DensityOperator& sigma, double p) {
    if (gamma_prime < 1.0) throw BadRange("achievability_channel: gamma' must be >= 1");
    if (p < 0.0 || p > 1.0) throw BadParameter("achievability_channel: p must lie in [0,1]");
    if (rho.dim() != sigma.dim())
        throw DimensionMismatch("achievability_channel: state dimensions differ");

    const Hermitian delta(rho.matrix() - gamma_prime * sigma.matrix());
    const Spectrum spec = eig_hermitian(delta);
    const Eigen::Index d = rho.dim();

    // Measure the nonnegative eigenspace, then prepare |0> or |1>.
    std::vector<Matrix> kraus;
    kraus.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index k = 0; k < d; ++k) {
        const Eigen::Index target = spec.eigenvalues(k) >= 0.0 ? 0 : 1;
        Matrix op = Matrix::Zero(2, d);
        op.row(target) = spec.eigenvectors.col(k).adjoint();
        kraus.push_back(std::move(op));
    }
    return compose(depolarizing(2, p), QuantumChannel(std::move(kraus)));
}

DensityOperator fixed_point(const QuantumChannel& n) {
    if (n.d_in() != n.d_out()) throw DimensionMismatch("fixed_point: channel must be square");
    const Eigen::Index d = n.d_in();
    const Eigen::Index dd = d * d;

    // Column-major vectorization: vec(K rho K^dag) = (conj(K) kron K) vec(rho).
    Matrix t = Matrix::Zero(dd, dd);
    for (const Matrix& k : n.kraus()) {
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                t.block(i * d, j * d, d, d) += std::conj(k(i, j)) * k;
    }

    // Null space of (T - I) through the Hermitian Gram matrix.
    const Matrix shifted = t - Matrix::Identity(dd, dd);
    Matrix gram_raw = shifted.adjoint() * shifted;
    gram_raw = ((gram_raw + gram_raw.adjoint()) / 2.0).eval();
    const Hermitian gram(std::move(gram_raw));
    const Spectrum spec = eig_hermitian(gram);

    constexpr double kNullTol = 1e-12;
    if (spec.eigenvalues(0) > kNullTol)
        throw NoFixedPointFound("fixed_point: transfer matrix has no eigenvalue-1 vector");
    if (dd > 1 && spec.eigenvalues(1) <= kNullTol)
        throw NonUniqueFixedPoint("fixed_point: eigenvalue-1 eigenspace is degenerate");

    Matrix s = Eigen::Map<const Matrix>(spec.eigenvectors.col(0).data(), d, d);
    // The null vector carries an arbitrary global phase; align it so the
    // trace is real and positive before symmetrizing.
    const Complex tr = s.trace();
    if (std::abs(tr) < 1e-12)
        throw NoFixedPointFound("fixed_point: fixed operator is traceless");
    s *= std::conj(tr) / std::abs(tr);
    s = ((s + s.adjoint()) / 2.0).eval();
    s /= s.trace().real();

    DensityOperator out = validate_density(s, 1e-8, 1e-8);
    if (max_abs(apply_channel_raw(n, out.matrix()) - out.matrix()) > 1e-8)
        throw NoFixedPointFound("fixed_point: residual exceeds tolerance");
    return out;
}

ClassicalChannel::ClassicalChannel(Eigen::MatrixXd w, double row_tol) : w_(std::move(w)) {
    if (w_.rows() < 1 || w_.cols() < 1)
        throw ValidationError("ClassicalChannel: empty kernel");
    for (Eigen::Index x = 0; x < w_.rows(); ++x) {
        double row = 0.0;
        for (Eigen::Index y = 0; y < w_.cols(); ++y) {
            const double v = w_(x, y);
            if (!std::isfinite(v) || v < 0.0)
                throw ValidationError("ClassicalChannel: entries must be finite and >= 0");
            row += v;
        }
        if (std::abs(row - 1.0) > row_tol)
            throw ValidationError("ClassicalChannel: row " + std::to_string(x) + " sums to " +
                                  std::to_string(row));
    }
}

Eigen::VectorXd classical_apply(const ClassicalChannel& w, const Eigen::VectorXd& p, double tol) {
    if (p.size() != w.n_inputs())
        throw DimensionMismatch("classical_apply: input length does not match kernel");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (!(p(i) >= 0.0)) throw NotDistribution("classical_apply: negative probability");
        sum += p(i);
    }
    if (std::abs(sum - 1.0) > tol)
        throw NotDistribution("classical_apply: probabilities sum to " + std::to_string(sum));
    return w.matrix().transpose() * p;
}

QuantumChannel embed_classical(const ClassicalChannel& w) {
    std::vector<Matrix> kraus;
    kraus.reserve(static_cast<std::size_t>(w.n_inputs() * w.n_outputs()));
    for (Eigen::Index x = 0; x < w.n_inputs(); ++x)
        for (Eigen::Index y = 0; y < w.n_outputs(); ++y) {
            if (w.matrix()(x, y) == 0.0) continue;
            Matrix k = Matrix::Zero(w.n_outputs(), w.n_inputs());
            k(y, x) = std::sqrt(w.matrix()(x, y));
            kraus.push_back(std::move(k));
        }
    return QuantumChannel(std::move(kraus));
}

}  // namespace hsdp
