#include "hsdp/contraction.hpp"

#include <algorithm>
#include <cmath>

#include "hsdp/random.hpp"

namespace hsdp {

double eta_classical_exact(const ClassicalChannel& w, double gamma) {
    if (!(gamma >= 1.0)) throw BadRange("eta_classical_exact: gamma must be >= 1");
    if (w.n_inputs() < 2) throw TooFewInputs("eta_classical_exact: need at least two inputs");
    double best = 0.0;
    for (Eigen::Index x = 0; x < w.n_inputs(); ++x) {
        for (Eigen::Index xp = 0; xp < w.n_inputs(); ++xp) {
            if (x == xp) continue;
            double e = 0.0;
            for (Eigen::Index y = 0; y < w.n_outputs(); ++y)
                e += std::max(0.0, w.matrix()(x, y) - gamma * w.matrix()(xp, y));
            best = std::max(best, e);
        }
    }
    return best;
}

double eta_upper_doeblin(const QuantumChannel& n) {
    const ChoiOperator gamma_op = choi(n);
    const double bound = 1.0 - static_cast<double>(n.d_out()) * min_eigenvalue(gamma_op.op);
    return std::clamp(bound, 0.0, 1.0);
}

namespace {

double pair_value(const QuantumChannel& n, double gamma, const Vector& v1, const Vector& v2) {
    const Matrix out1 = apply_channel_raw(n, (v1 * v1.adjoint()).eval());
    const Matrix out2 = apply_channel_raw(n, (v2 * v2.adjoint()).eval());
    const Hermitian diff(((out1 - gamma * out2) + (out1 - gamma * out2).adjoint()).eval() / 2.0);
    const Spectrum spec = eig_hermitian(diff);
    double plus = 0.0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
        if (spec.eigenvalues(k) > 0.0) plus += spec.eigenvalues(k);
    return plus - std::max(0.0, 1.0 - gamma);
}

void reorthonormalize(Vector& v1, Vector& v2) {
    v1 /= v1.norm();
    v2 -= (v1.adjoint() * v2)(0, 0) * v1;
    const double n2 = v2.norm();
    if (n2 < 1e-12) {
        // Degenerate proposal; reset the second vector to any orthogonal one.
        Eigen::Index k = 0;
        v1.cwiseAbs().minCoeff(&k);
        v2 = Vector::Zero(v1.size());
        v2(k) = 1.0;
        v2 -= (v1.adjoint() * v2)(0, 0) * v1;
        v2 /= v2.norm();
    } else {
        v2 /= n2;
    }
}

// Coordinate-wise pattern search with shrinking step, accepting improving
// moves only. Orthonormality is restored after every proposal.
double refine_pair(const QuantumChannel& n, double gamma, Vector& v1, Vector& v2, int iters,
                   std::mt19937_64& rng) {
    double best = pair_value(n, gamma, v1, v2);
    if (iters <= 0) return best;
    const Eigen::Index d = n.d_in();
    constexpr int kRounds = 8;
    constexpr double kDecay = 0.7;
    double step = 0.5;
    const int per_round = std::max(1, iters / kRounds);
    std::uniform_int_distribution<int> coord(0, static_cast<int>(4 * d) - 1);
    std::uniform_int_distribution<int> signs(0, 1);
    for (int round = 0; round < kRounds; ++round) {
        for (int it = 0; it < per_round; ++it) {
            const int c = coord(rng);
            const double delta = (signs(rng) == 0 ? 1.0 : -1.0) * step;
            Vector w1 = v1, w2 = v2;
            Vector& target = (c < 2 * d) ? w1 : w2;
            const Eigen::Index idx = (c / 2) % d;
            if (c % 2 == 0)
                target(idx) += delta;
            else
                target(idx) += Complex(0.0, delta);
            reorthonormalize(w1, w2);
            const double val = pair_value(n, gamma, w1, w2);
            if (val > best) {
                best = val;
                v1 = std::move(w1);
                v2 = std::move(w2);
            }
        }
        step *= kDecay;
    }
    return best;
}

}  // namespace

ContractionEstimate eta_quantum_lower(const QuantumChannel& n, double gamma,
                                      const EstimatorBudget& budget) {
    if (!(gamma >= 1.0)) throw BadRange("eta_quantum_lower: gamma must be >= 1");
    if (n.d_in() < 2) throw ValidationError("eta_quantum_lower: input dimension must be >= 2");

    const Eigen::Index d = n.d_in();
    ContractionEstimate est;
    est.gamma = gamma;
    est.restarts_used = std::max(0, budget.restarts);
    est.upper_bound = std::min(1.0, eta_upper_doeblin(n));

    Vector best1 = Vector::Zero(d), best2 = Vector::Zero(d);
    best1(0) = 1.0;
    best2(1) = 1.0;
    double best = pair_value(n, gamma, best1, best2);

    // Basis pairs are tried first; the classical optimum sits on one of them.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> basis_pairs;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            if (i != j) basis_pairs.emplace_back(i, j);

    for (int trial = 0; trial < budget.restarts; ++trial) {
        std::mt19937_64 rng(substream(budget.seed, static_cast<std::uint64_t>(trial)));
        Vector v1, v2;
        if (static_cast<std::size_t>(trial) < basis_pairs.size()) {
            v1 = Vector::Zero(d);
            v2 = Vector::Zero(d);
            v1(basis_pairs[static_cast<std::size_t>(trial)].first) = 1.0;
            v2(basis_pairs[static_cast<std::size_t>(trial)].second) = 1.0;
        } else {
            const Matrix u = haar_unitary(d, rng);
            v1 = u.col(0);
            v2 = u.col(1);
        }
        const double val = refine_pair(n, gamma, v1, v2, budget.iters, rng);
        if (val > best) {
            best = val;
            best1 = v1;
            best2 = v2;
        }
    }

    est.lower_bound = std::clamp(best, 0.0, 1.0);
    est.witness = std::make_pair(PureState(best1), PureState(best2));
    return est;
}

double classical_delta_lower_bound(const ClassicalChannel& w, double gamma) {
    if (!(gamma >= 1.0)) throw BadRange("classical_delta_lower_bound: gamma must be >= 1");
    double best = 0.0;
    for (Eigen::Index x = 0; x < w.n_inputs(); ++x)
        for (Eigen::Index y = 0; y < w.n_outputs(); ++y) {
            if (w.matrix()(x, y) != 0.0) continue;
            for (Eigen::Index xp = 0; xp < w.n_inputs(); ++xp)
                if (xp != x) best = std::max(best, w.matrix()(xp, y));
        }
    return best;
}

double quantum_necessary_delta_lower(const QuantumChannel& n, int samples, std::uint64_t seed) {
    const Eigen::Index d_in = n.d_in(), d_out = n.d_out();
    if (d_in < 2) return 0.0;
    double best = 0.0;
    for (int t = 0; t < samples; ++t) {
        std::mt19937_64 rng(substream(seed, 0x5eed0000ULL + static_cast<std::uint64_t>(t)));
        Vector phi;
        if (t < d_in) {
            phi = Vector::Zero(d_in);
            phi(t) = 1.0;
        } else {
            phi = random_pure(d_in, rng).amplitudes();
        }

        // Support projector of N(phi).
        const Matrix out = apply_channel_raw(n, (phi * phi.adjoint()).eval());
        const Spectrum os = eig_hermitian(Hermitian(((out + out.adjoint()) / 2.0).eval()));
        Matrix proj = Matrix::Zero(d_out, d_out);
        for (Eigen::Index k = 0; k < d_out; ++k)
            if (os.eigenvalues(k) > kEigTol)
                proj.noalias() += os.eigenvectors.col(k) * os.eigenvectors.col(k).adjoint();

        // min over states orthogonal to phi of Tr[proj N(rho)]: smallest
        // eigenvalue of the adjoint-channel image restricted to phi-perp.
        Matrix adj = Matrix::Zero(d_in, d_in);
        for (const Matrix& k : n.kraus()) adj.noalias() += k.adjoint() * proj * k;
        // Orthonormal basis of phi-perp from the complement projector.
        Matrix basis(d_in, d_in - 1);
        {
            Matrix g = Matrix::Identity(d_in, d_in) - phi * phi.adjoint();
            const Spectrum gs = eig_hermitian(Hermitian(((g + g.adjoint()) / 2.0).eval()));
            Eigen::Index c = 0;
            for (Eigen::Index k = 0; k < d_in && c < d_in - 1; ++k)
                if (gs.eigenvalues(k) > 0.5) basis.col(c++) = gs.eigenvectors.col(k);
            if (c < d_in - 1) continue;
        }
        Matrix restricted = basis.adjoint() * adj * basis;
        restricted = ((restricted + restricted.adjoint()) / 2.0).eval();
        const double lambda = min_eigenvalue(Hermitian(std::move(restricted)));
        best = std::max(best, 1.0 - lambda);
    }
    return std::clamp(best, 0.0, 1.0);
}

const char* to_string(Containment v) {
    switch (v) {
        case Containment::certified_in: return "certified_in";
        case Containment::certified_out: return "certified_out";
        default: return "unknown";
    }
}

const char* to_string(ContainmentReason r) {
    switch (r) {
        case ContainmentReason::doeblin_choi: return "doeblin_choi";
        case ContainmentReason::gamma_choi: return "gamma_choi";
        case ContainmentReason::depolarizing_threshold: return "depolarizing_threshold";
        case ContainmentReason::classical_necessary: return "classical_necessary";
        case ContainmentReason::quantum_rank: return "quantum_rank";
        case ContainmentReason::estimator_witness: return "estimator_witness";
        default: return "none";
    }
}

namespace {

// Fits N(E_ij) = (1-p) E_ij + delta_ij p I/d; empty when the channel does
// not act as a depolarizing map.
std::optional<double> depolarizing_parameter(const QuantumChannel& n) {
    if (n.d_in() != n.d_out()) return std::nullopt;
    const Eigen::Index d = n.d_in();
    Matrix unit = Matrix::Zero(d, d);
    unit(0, 0) = 1.0;
    const Matrix out00 = apply_channel_raw(n, unit);
    const double dd = static_cast<double>(d);
    double p = (1.0 - out00(0, 0).real()) * dd / (dd - 1.0);
    p = std::clamp(p, 0.0, 1.0);
    unit(0, 0) = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            unit(i, j) = 1.0;
            Matrix expected = (1.0 - p) * unit;
            if (i == j) expected += (p / dd) * Matrix::Identity(d, d);
            const double dev = max_abs(apply_channel_raw(n, unit) - expected);
            unit(i, j) = 0.0;
            if (dev > 1e-10) return std::nullopt;
        }
    }
    return p;
}

}  // namespace

ContainmentCertificate containment_check(const QuantumChannel& n, double gamma, double delta,
                                         const EstimatorBudget& budget) {
    if (!(gamma >= 1.0)) throw BadRange("containment_check: gamma must be >= 1");
    if (delta < 0.0 || delta > 1.0) throw BadRange("containment_check: delta must lie in [0,1]");

    const double choi_min = min_eigenvalue(choi(n).op);
    const double doeblin = std::clamp(1.0 - static_cast<double>(n.d_out()) * choi_min, 0.0, 1.0);
    if (delta >= doeblin - 1e-12)
        return {Containment::certified_in, ContainmentReason::doeblin_choi, doeblin};

    // Depolarizing maps admit an exact noise threshold stronger than the
    // Choi routes.
    if (const std::optional<double> p = depolarizing_parameter(n)) {
        const double d_out = static_cast<double>(n.d_out());
        const double threshold = d_out * (1.0 - delta) / (gamma - 1.0 + d_out);
        if (*p >= threshold - 1e-12)
            return {Containment::certified_in, ContainmentReason::depolarizing_threshold, *p};
    }

    const ContractionEstimate est = eta_quantum_lower(n, gamma, budget);
    if (est.lower_bound > delta + 1e-9)
        return {Containment::certified_out, ContainmentReason::estimator_witness, est.lower_bound};

    // The gamma-scaled Choi bound applies once the channel is witnessed
    // outside the delta = 0 class.
    if (est.lower_bound > 1e-9) {
        const double gamma_bound = std::clamp(1.0 - gamma * choi_min, 0.0, 1.0);
        if (delta >= gamma_bound - 1e-12)
            return {Containment::certified_in, ContainmentReason::gamma_choi, gamma_bound};
    }

    // Rank deficiency of some pure-state output rules out delta = 0, valid
    // when the output space is spanned by the image.
    if (delta <= 1e-12) {
        const Matrix mixed_out = apply_channel_raw(n, (Matrix::Identity(n.d_in(), n.d_in()) /
                                                       static_cast<double>(n.d_in()))
                                                          .eval());
        const bool full_image =
            min_eigenvalue(Hermitian(((mixed_out + mixed_out.adjoint()) / 2.0).eval())) > kEigTol;
        if (full_image) {
            const int probes = std::max(4, std::min(budget.restarts, 16));
            for (int t = 0; t < probes; ++t) {
                std::mt19937_64 rng(substream(budget.seed, 0xc0ffee00ULL + static_cast<std::uint64_t>(t)));
                Vector phi;
                if (t < n.d_in()) {
                    phi = Vector::Zero(n.d_in());
                    phi(t) = 1.0;
                } else {
                    phi = random_pure(n.d_in(), rng).amplitudes();
                }
                const Matrix out = apply_channel_raw(n, (phi * phi.adjoint()).eval());
                const Spectrum os = eig_hermitian(Hermitian(((out + out.adjoint()) / 2.0).eval()));
                Eigen::Index rank = 0;
                for (Eigen::Index k = 0; k < os.eigenvalues.size(); ++k)
                    if (os.eigenvalues(k) > kEigTol) ++rank;
                if (rank < n.d_out())
                    return {Containment::certified_out, ContainmentReason::quantum_rank,
                            static_cast<double>(rank)};
            }
        }
    }

    return {Containment::unknown, ContainmentReason::none, est.lower_bound};
}

ContainmentCertificate containment_check(const ClassicalChannel& w, double gamma, double delta) {
    if (!(gamma >= 1.0)) throw BadRange("containment_check: gamma must be >= 1");
    if (delta < 0.0 || delta > 1.0) throw BadRange("containment_check: delta must lie in [0,1]");
    const double necessary = classical_delta_lower_bound(w, gamma);
    if (delta < necessary - 1e-12)
        return {Containment::certified_out, ContainmentReason::classical_necessary, necessary};
    const double eta = eta_classical_exact(w, gamma);
    if (eta <= delta + 1e-12)
        return {Containment::certified_in, ContainmentReason::classical_necessary, eta};
    return {Containment::certified_out, ContainmentReason::classical_necessary, eta};
}

}  // namespace hsdp
