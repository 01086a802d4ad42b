#include <doctest.h>

#include <cmath>
#include <random>

#include "hsdp/divergences.hpp"
#include "hsdp/random.hpp"
#include "oracles.hpp"

using namespace hsdp;

namespace {

DensityOperator diag2(double a, double b) {
    Eigen::VectorXd p(2);
    p << a, b;
    return diagonal_state(p);
}

// Half the trace norm of the difference, via eigenvalue magnitudes.
double trace_distance_oracle(const DensityOperator& rho, const DensityOperator& sigma) {
    const Spectrum s = eig_hermitian(Hermitian(rho.matrix() - sigma.matrix()));
    double sum = 0.0;
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) sum += std::abs(s.eigenvalues(k));
    return 0.5 * sum;
}

}  // namespace

TEST_CASE("hs_divergence closed cases") {
    std::mt19937_64 rng(41);
    const DensityOperator rho = random_density(3, rng);
    CHECK(std::abs(hs_divergence(rho, rho, 1.0)) < 1e-12);
    CHECK(std::abs(hs_divergence(rho, rho, 2.5)) < 1e-12);

    CHECK(hs_divergence(basis_state(2, 0), basis_state(2, 1), 3.0) ==
          doctest::Approx(1.0).epsilon(1e-12));

    CHECK(hs_divergence(diag2(0.6, 0.4), diag2(0.3, 0.7), 1.5) ==
          doctest::Approx(0.15).epsilon(1e-12));

    CHECK_THROWS_AS(hs_divergence(rho, random_density(2, rng), 1.0), DimensionMismatch);
}

TEST_CASE("hs at gamma = 1 equals the trace distance") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityOperator rho = random_density(2, rng);
        const DensityOperator sigma = random_density(2, rng);
        CHECK(hs_divergence(rho, sigma, 1.0) ==
              doctest::Approx(trace_distance_oracle(rho, sigma)).epsilon(1e-11));
        CHECK(trace_distance(rho, sigma) ==
              doctest::Approx(trace_distance(sigma, rho)).epsilon(1e-11));
    }
}

TEST_CASE("hs_classical") {
    Eigen::VectorXd p(2), q(2);
    p << 0.6, 0.4;
    q << 0.3, 0.7;
    CHECK(hs_classical(p, p, 2.0) == doctest::Approx(0.0));
    CHECK(hs_classical(p, q, 1.5) == doctest::Approx(0.15).epsilon(1e-12));
    Eigen::VectorXd e0(2), e1(2);
    e0 << 1, 0;
    e1 << 0, 1;
    CHECK(hs_classical(e0, e1, 2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(hs_classical(p, Eigen::VectorXd::Ones(3) / 3.0, 1.5), DimensionMismatch);
}

TEST_CASE("hs_divergence matches hs_classical on diagonal embeddings") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index d = 2 + trial % 4;
        const Eigen::VectorXd p = random_distribution(d, rng);
        const Eigen::VectorXd q = random_distribution(d, rng);
        const double gamma = 1.0 + 4.0 * (trial % 17) / 16.0;
        CHECK(std::abs(hs_divergence(diagonal_state(p), diagonal_state(q), gamma) -
                       hs_classical(p, q, gamma)) <= 1e-12);
    }
}

TEST_CASE("hs_sym takes the larger direction") {
    const DensityOperator rho = diag2(0.6, 0.4), sigma = diag2(0.3, 0.7);
    CHECK(hs_sym(rho, sigma, 1.5) == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(hs_divergence(sigma, rho, 1.5) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(hs_sym(rho, rho, 2.0) == doctest::Approx(0.0));
    CHECK(hs_sym(basis_state(2, 0), basis_state(2, 1), 5.0) == doctest::Approx(1.0));
}

TEST_CASE("d_max closed cases") {
    std::mt19937_64 rng(53);
    const DensityOperator rho = random_density(3, rng);
    CHECK(std::abs(d_max(rho, rho)) < 1e-9);
    CHECK(d_max(basis_state(2, 0), maximally_mixed(2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(std::isinf(d_max(basis_state(2, 0), basis_state(2, 1))));
}

TEST_CASE("smooth_d_max bisection") {
    const DensityOperator rho = diag2(0.6, 0.4), sigma = diag2(0.3, 0.7);
    CHECK(smooth_d_max(rho, sigma, 0.5) == doctest::Approx(0.0));  // delta above E_1 = 0.3
    CHECK(smooth_d_max(rho, sigma, 0.06) == doctest::Approx(std::log(1.8)).epsilon(1e-9));
    CHECK(std::isinf(smooth_d_max(basis_state(2, 0), basis_state(2, 1), 0.5)));
}

TEST_CASE("smooth_d_max duality on random pairs") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        const double delta = 0.01 + 0.2 * (trial % 5) / 5.0;
        const double val = smooth_d_max(rho, sigma, delta);
        REQUIRE(std::isfinite(val));
        const double gamma_star = std::exp(val);
        CHECK(hs_divergence(rho, sigma, gamma_star) <= delta + 1e-7);
        if (gamma_star > 1.0 + 1e-9)
            CHECK(hs_divergence(rho, sigma, gamma_star * (1.0 - 1e-6)) > delta);
    }
}

TEST_CASE("data processing on random channel-state triples") {
    std::mt19937_64 rng(61);
    const double gammas[] = {1.0, 1.5, 2.0, 5.0};
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const QuantumChannel n = random_channel(d, d, 2, rng);
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        const DensityOperator out_r = apply_channel(n, rho);
        const DensityOperator out_s = apply_channel(n, sigma);
        for (double g : gammas)
            CHECK(hs_divergence(out_r, out_s, g) <= hs_divergence(rho, sigma, g) + 1e-9);
    }
}

TEST_CASE("monotone and midpoint-convex in gamma") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        std::uniform_real_distribution<double> uni(1.0, 6.0);
        double g1 = uni(rng), g2 = uni(rng);
        if (g1 > g2) std::swap(g1, g2);
        const double e1 = hs_divergence(rho, sigma, g1);
        const double e2 = hs_divergence(rho, sigma, g2);
        CHECK(e1 >= e2 - 1e-12);
        const double mid = hs_divergence(rho, sigma, 0.5 * (g1 + g2));
        CHECK(mid <= 0.5 * (e1 + e2) + 1e-9);
    }
}

TEST_CASE("variational lower bounds never exceed the hockey-stick value") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        const double gamma = 1.0 + 3.0 * (trial % 7) / 6.0;
        const double value = hs_divergence(rho, sigma, gamma);
        // Random measurement operator 0 <= M <= I.
        const Matrix u = haar_unitary(d, rng);
        Eigen::VectorXd w(d);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (Eigen::Index k = 0; k < d; ++k) w(k) = uni(rng);
        const Matrix m = u * w.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint();
        const double lower =
            (m * (rho.matrix() - gamma * sigma.matrix())).trace().real();
        CHECK(lower <= value + 1e-9);
    }
}

TEST_CASE("generator validation") {
    CHECK_NOTHROW(make_kl());
    CHECK_NOTHROW(make_total_variation());
    CHECK_NOTHROW(make_chi_squared());
    CHECK_NOTHROW(make_hockey_stick(2.0));
    CHECK_THROWS_AS(make_hockey_stick(0.5), BadParameter);

    FGenerator shifted;
    shifted.name = "shifted";
    shifted.f = [](double x) { return x; };  // f(1) = 1
    shifted.f_second = [](double) { return 0.0; };
    CHECK_THROWS_AS(validate_generator(shifted), BadParameter);

    FGenerator concave;
    concave.name = "concave";
    concave.f = [](double x) { return -(x - 1.0) * (x - 1.0); };
    concave.f_second = [](double) { return -2.0; };
    CHECK_THROWS_AS(validate_generator(concave), BadParameter);
}

TEST_CASE("f_divergence closed cases") {
    std::mt19937_64 rng(73);
    const DensityOperator rho = random_density(3, rng);
    CHECK(f_divergence(rho, rho, make_kl()) == doctest::Approx(0.0));

    const DensityOperator a = diag2(0.6, 0.4), b = diag2(0.3, 0.7);
    const double kl_expected = 0.6 * std::log(2.0) + 0.4 * std::log(4.0 / 7.0);
    CHECK(f_divergence(a, b, make_kl()) == doctest::Approx(kl_expected).epsilon(1e-8));

    // Total-variation generator reproduces the trace distance.
    CHECK(f_divergence(a, b, make_total_variation()) == doctest::Approx(0.3).epsilon(1e-12));

    // Hockey-stick generator reproduces the divergence at its order.
    CHECK(f_divergence(a, b, make_hockey_stick(1.5)) == doctest::Approx(0.15).epsilon(1e-12));
}

TEST_CASE("f_divergence with disjoint or partial supports") {
    // KL diverges when rho has mass outside the support of sigma.
    CHECK(std::isinf(f_divergence(basis_state(2, 0), basis_state(2, 1), make_kl())));

    // Bounded generators stay finite there.
    CHECK(f_divergence(basis_state(2, 0), basis_state(2, 1), make_total_variation()) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // sigma missing support inside rho keeps KL finite: classical value ln 2.
    Eigen::VectorXd p(2), q(2);
    p << 1.0, 0.0;
    q << 0.5, 0.5;
    const double v = f_divergence(diagonal_state(q), diagonal_state(p), make_kl());
    CHECK(std::isinf(v));
    const double finite = f_divergence(diagonal_state(p), diagonal_state(q), make_kl());
    CHECK(finite == doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("f_divergence matches the classical formula on diagonal states") {
    std::mt19937_64 rng(79);
    const FGenerator kl = make_kl();
    const FGenerator chi2 = make_chi_squared();
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const Eigen::VectorXd p = random_distribution(d, rng);
        const Eigen::VectorXd q = random_distribution(d, rng);
        const DensityOperator rho = diagonal_state(p), sigma = diagonal_state(q);
        CHECK(std::abs(f_divergence(rho, sigma, kl) - oracles::classical_kl(p, q)) <= 1e-7);
        if (trial % 10 == 0) {
            const double expected = oracles::classical_f_div(
                p, q, [](double x) { return (x - 1.0) * (x - 1.0); });
            CHECK(std::abs(f_divergence(rho, sigma, chi2) - expected) <= 1e-7);
        }
    }
}

TEST_CASE("bounded-slope generators stay finite across disjoint supports") {
    // Convex, f(1) = 0, slope saturating at 1, so the divergence converges
    // even when one max-relative entropy is infinite.
    FGenerator hyper;
    hyper.name = "hyperbolic";
    hyper.f = [](double x) { return std::sqrt(1.0 + (x - 1.0) * (x - 1.0)) - 1.0; };
    hyper.f_second = [](double x) {
        const double s = 1.0 + (x - 1.0) * (x - 1.0);
        return 1.0 / (s * std::sqrt(s));
    };
    hyper.slope_unbounded_at_inf = false;
    hyper.unbounded_at_zero = false;
    validate_generator(hyper);

    // Full-support check against the classical formula first.
    Eigen::VectorXd p(2), q(2);
    p << 0.8, 0.2;
    q << 0.4, 0.6;
    const double expected = oracles::classical_f_div(p, q, hyper.f);
    CHECK(f_divergence(diagonal_state(p), diagonal_state(q), hyper, 1e-9) ==
          doctest::Approx(expected).epsilon(1e-7));

    // Mass of rho outside the support of sigma contributes its slope limit.
    Eigen::VectorXd ps(2), qs(2);
    ps << 0.7, 0.3;
    qs << 1.0, 0.0;
    const double tail = oracles::classical_f_div(ps, qs, hyper.f) + 0.3 * 1.0;
    const double got = f_divergence(diagonal_state(ps), diagonal_state(qs), hyper, 1e-9);
    CHECK(got == doctest::Approx(tail).epsilon(1e-6));
}

TEST_CASE("order inversion identity covers gamma below 1") {
    std::mt19937_64 rng(229);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        std::uniform_real_distribution<double> uni(0.2, 5.0);
        const double gamma = uni(rng);
        CHECK(std::abs(hs_divergence(rho, sigma, gamma) -
                       gamma * hs_divergence(sigma, rho, 1.0 / gamma)) <= 1e-11);
    }
}
