#include "hsdp/random.hpp"

#include <cmath>

namespace hsdp {

std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined word
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

Matrix haar_unitary(Eigen::Index d, std::mt19937_64& rng) {
    const Matrix g = random_gaussian(d, d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases so the distribution is Haar rather than QR-convention biased.
    for (Eigen::Index k = 0; k < d; ++k) {
        const Complex rkk = r(k, k);
        if (std::abs(rkk) > 0.0) q.col(k) *= rkk / std::abs(rkk);
    }
    return q;
}

PureState random_pure(Eigen::Index d, std::mt19937_64& rng) {
    Vector v = random_gaussian(d, 1, rng).col(0);
    v /= v.norm();
    return PureState(std::move(v));
}

DensityOperator random_density(Eigen::Index d, std::mt19937_64& rng) {
    const Matrix g = random_gaussian(d, d, rng);
    Matrix w = g * g.adjoint();
    w = ((w + w.adjoint()) / 2.0).eval();
    w /= w.trace().real();
    return validate_density(w);
}

Hermitian random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
    const Matrix g = random_gaussian(d, d, rng);
    return Hermitian(((g + g.adjoint()) / 2.0).eval());
}

QuantumChannel random_channel(Eigen::Index d_in, Eigen::Index d_out, Eigen::Index env_dim,
                              std::mt19937_64& rng) {
    if (d_in < 1 || d_out < 1 || env_dim < 1)
        throw BadParameter("random_channel: dimensions must be positive");
    if (d_out * env_dim < d_in)
        throw BadParameter("random_channel: environment too small for an isometry");
    // Isometry V : in -> out x env from the first d_in columns of a Haar unitary.
    const Matrix u = haar_unitary(d_out * env_dim, rng);
    std::vector<Matrix> kraus(static_cast<std::size_t>(env_dim),
                              Matrix::Zero(d_out, d_in));
    for (Eigen::Index j = 0; j < d_in; ++j)
        for (Eigen::Index i = 0; i < d_out; ++i)
            for (Eigen::Index e = 0; e < env_dim; ++e)
                kraus[static_cast<std::size_t>(e)](i, j) = u(i * env_dim + e, j);
    return QuantumChannel(std::move(kraus));
}

ClassicalChannel random_classical(Eigen::Index n_in, Eigen::Index n_out, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Eigen::MatrixXd w(n_in, n_out);
    for (Eigen::Index x = 0; x < n_in; ++x) {
        double row = 0.0;
        for (Eigen::Index y = 0; y < n_out; ++y) {
            w(x, y) = -std::log(1.0 - uni(rng));
            row += w(x, y);
        }
        w.row(x) /= row;
    }
    return ClassicalChannel(std::move(w));
}

Eigen::VectorXd random_distribution(Eigen::Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Eigen::VectorXd p(n);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        p(i) = -std::log(1.0 - uni(rng));
        sum += p(i);
    }
    return p / sum;
}

}  // namespace hsdp
