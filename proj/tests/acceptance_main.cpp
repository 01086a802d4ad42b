// acceptance_main.cpp — End-to-end acceptance suite. Each criterion prints
// one PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hsdp/bounds.hpp"
#include "hsdp/contraction.hpp"
#include "hsdp/privacy.hpp"
#include "hsdp/random.hpp"
#include "oracles.hpp"

using namespace hsdp;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int index, const char* name, bool ok, const std::string& details, double elapsed_ms) {
    std::printf("[%d/8] %s %s (%s, %.0f ms)\n", index, ok ? "PASS" : "FAIL", name,
                details.c_str(), elapsed_ms);
    if (!ok) ++g_failures;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;  // NaN marks an empty field
};

CsvTable parse_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (line.size() && line.back() == ',') fields.push_back("");
        if (first) {
            table.header = fields;
            first = false;
            continue;
        }
        std::vector<double> row;
        for (const std::string& f : fields)
            row.push_back(f.empty() ? std::nan("") : std::stod(f));
        table.rows.push_back(std::move(row));
    }
    return table;
}

DensityOperator diag2(double a, double b) {
    Eigen::VectorXd p(2);
    p << a, b;
    return diagonal_state(p);
}

// Commuting pair with E_gamma'(rho||sigma) = t.
std::pair<DensityOperator, DensityOperator> pair_with_divergence(double gamma_prime, double t) {
    const double s = (1.0 - t) / gamma_prime;
    return {basis_state(2, 0), diag2(s, 1.0 - s)};
}

// 1. Figure "comparison of data-processing bounds" through the CLI.
void criterion_figure_compare() {
    const auto start = Clock::now();
    const fs::path csv = fs::temp_directory_path() / "hsdp_acc_compare.csv";
    const std::string cmd = std::string(HSDP_CLI_PATH) +
                            " figure compare --gamma 6 --gamma-prime 2.5 --delta 0.01"
                            " --points 201 --output " +
                            csv.string();
    bool ok = std::system(cmd.c_str()) == 0;
    std::string details = "201 grid rows";
    if (ok) {
        const CsvTable table = parse_csv(csv);
        ok = table.rows.size() == 201 && table.header.size() == 4;
        bool order_ok = true, t1_ok = false, kink_ok = false;
        for (const std::vector<double>& row : table.rows) {
            const double t = row[0], dpi = row[1], lin = row[2], nl = row[3];
            if (!(nl <= lin + 1e-12 && lin <= dpi + 1e-12)) order_ok = false;
            if (std::abs(t - 1.0) < 1e-15)
                t1_ok = std::abs(nl - 0.505) <= 1e-12 && std::abs(lin - 0.505) <= 1e-12;
            if (std::abs(t - 0.3) < 1e-12) kink_ok = std::abs(nl - 0.003) <= 1e-12;
        }
        ok = ok && order_ok && t1_ok && kink_ok;
        details = "ordering, t=1 value 0.505, kink value 0.003";
    }
    const double elapsed = ms_since(start);
    report(1, "figure-compare reproduction", ok && elapsed < 1000.0, details, elapsed);
}

// 2. Achievability of the non-linear bound across the parameter grid.
void criterion_tightness() {
    const auto start = Clock::now();
    int points = 0, passed = 0;
    for (const auto& [g, gp] :
         std::vector<std::pair<double, double>>{{4.0, 2.0}, {6.0, 2.5}, {10.0, 1.5}}) {
        for (int k = 0; k < 10; ++k) {
            const double t = static_cast<double>(k) / 9.0;
            const auto [rho, sigma] = pair_with_divergence(gp, t);
            ++points;
            if (tightness_check(g, gp, 0.0, rho, sigma, 1e-9).passed) ++passed;
        }
        const double t_lo = (gp - 1.0) / (g - 1.0);
        for (int k = 0; k < 10; ++k) {
            const double t = t_lo + (1.0 - t_lo) * static_cast<double>(k) / 9.0;
            const double delta = 0.05 + 0.95 * static_cast<double>(k) / 9.0;
            const auto [rho, sigma] = pair_with_divergence(gp, t);
            ++points;
            if (tightness_check(g, gp, delta, rho, sigma, 1e-9).passed) ++passed;
        }
    }
    const double elapsed = ms_since(start);
    report(2, "non-linear bound tightness", passed == points && elapsed < 5000.0,
           std::to_string(passed) + "/" + std::to_string(points) + " grid points at 1e-9",
           elapsed);
}

// 3. Mixing-time figure values.
void criterion_mixing() {
    const auto start = Clock::now();
    const long nl0 = mixing_time_nonlinear(8.0, 3.0, 0.0);
    const std::optional<long> lin01 = mixing_time_linear(8.0, 3.0, 0.0, 0.1);
    const std::optional<long> lin0 = mixing_time_linear(8.0, 3.0, 0.0, 0.0);
    const bool ok = nl0 == 3 && lin01.has_value() && *lin01 == 4 && !lin0.has_value();
    const double elapsed = ms_since(start);
    report(3, "mixing-time reproduction", ok && elapsed < 100.0,
           "nonlinear(0)=3, linear(0.1)=4, linear(0) unbounded", elapsed);
}

// 4. Dominance over the prior privacy bound on both sweep panels.
void criterion_dominance() {
    const auto start = Clock::now();
    const double tau = 0.25;
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
        const double eps = 0.5 + 2.5 * i / 49.0;
        for (double delta : {0.1, 0.2, 0.3}) {
            const double ours = re_ldp_bound(eps, delta, tau, 0.1);
            const double prior = dasgupta_bound(eps, delta, tau, 0.1);
            if (!(ours < prior)) ok = false;
        }
    }
    for (int i = 0; i < 50 && ok; ++i) {
        const double lambda = 0.02 + (0.5 - 0.02) * i / 49.0;
        for (double eps : {1.0, 2.0, 3.0}) {
            const double ours = re_ldp_bound(eps, 0.01, tau, lambda);
            const double prior = dasgupta_bound(eps, 0.01, tau, lambda);
            if (!(ours < prior)) ok = false;
        }
    }
    const double elapsed = ms_since(start);
    report(4, "privacy bound dominance", ok && elapsed < 1000.0,
           "strict at delta > 0 on 300 grid points", elapsed);
}

// 5. Measured contraction of certified channels never beats the bounds.
void criterion_sdpi_soundness() {
    const auto start = Clock::now();
    std::mt19937_64 rng(substream(2024, 5));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int certified = 0, sound = 0, attempts = 0;
    while (certified < 500 && attempts < 2000) {
        ++attempts;
        const Eigen::Index d = 2 + attempts % 3;
        const QuantumChannel n = random_channel(d, d, d, rng);
        const double gamma = 1.0 + 5.0 * uni(rng);
        const double delta = std::min(1.0, eta_upper_doeblin(n) + 1e-12);
        if (containment_check(n, gamma, delta, {2, 10, 7}).verdict !=
            Containment::certified_in)
            continue;
        ++certified;
        const double gp = 1.0 + (gamma - 1.0) * uni(rng);
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        const double in = hs_divergence(rho, sigma, gp);
        const double out = hs_divergence(apply_channel(n, rho), apply_channel(n, sigma), gp);
        const double nl = nonlinear_sdpi({gamma, gp, delta, in});
        if (out <= nl + 1e-8 && nl <= linear_sdpi(gamma, gp, delta) * in + 1e-8) ++sound;
    }
    const double elapsed = ms_since(start);
    report(5, "empirical SDPI soundness",
           certified >= 500 && sound == certified && elapsed < 60000.0,
           std::to_string(sound) + "/" + std::to_string(certified) + " certified instances",
           elapsed);
}

// 6. Independent oracles agree with the implementation paths.
void criterion_oracles() {
    const auto start = Clock::now();
    std::mt19937_64 rng(substream(2024, 6));
    bool ok = true;

    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const Eigen::Index d = 2 + trial % 4;
        const Eigen::VectorXd p = random_distribution(d, rng);
        const Eigen::VectorXd q = random_distribution(d, rng);
        const double gamma = 1.0 + 6.0 * (trial % 13) / 12.0;
        if (std::abs(hs_divergence(diagonal_state(p), diagonal_state(q), gamma) -
                     hs_classical(p, q, gamma)) > 1e-12)
            ok = false;
    }

    const FGenerator kl = make_kl();
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const Eigen::VectorXd p = random_distribution(d, rng);
        const Eigen::VectorXd q = random_distribution(d, rng);
        if (std::abs(f_divergence(diagonal_state(p), diagonal_state(q), kl, 1e-8) -
                     oracles::classical_kl(p, q)) > 1e-7)
            ok = false;
    }

    int reached = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n_in = 2 + trial % 3;
        const Eigen::Index n_out = 2 + (trial / 3) % 3;
        const ClassicalChannel w = random_classical(n_in, n_out, rng);
        const double gamma = 1.0 + 4.0 * (trial % 9) / 8.0;
        const double exact = eta_classical_exact(w, gamma);
        const ContractionEstimate est =
            eta_quantum_lower(embed_classical(w), gamma, {64, 200, 11});
        if (est.lower_bound >= exact - 1e-6 && est.lower_bound <= exact + 1e-9) ++reached;
    }
    ok = ok && reached == 100;
    const double elapsed = ms_since(start);
    report(6, "oracle equivalence", ok,
           "classical hockey-stick, KL quadrature, estimator vs exact (" +
               std::to_string(reached) + "/100)",
           elapsed);
}

// 7. Scalar machinery identities.
void criterion_identities() {
    const auto start = Clock::now();
    std::mt19937_64 rng(substream(2024, 7));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    bool ok = true;

    for (int triple = 0; triple < 10 && ok; ++triple) {
        const double gp = 1.05 + 2.0 * uni(rng);
        const double g = gp + 0.3 + 4.0 * uni(rng);
        const double delta = 0.02 + 0.9 * uni(rng);
        const HittingTimeParams hp = hitting_params(g, gp, delta);
        if (std::abs(hp.b / (1.0 - hp.a) - (gp - 1.0) / 2.0) > 1e-12) ok = false;
        for (int m = 1; m <= 20 && ok; ++m)
            for (int k = 0; k <= 100; ++k) {
                const double t = k / 100.0;
                const double lhs = g_n(hp, std::clamp(g_n(hp, t, m), 0.0, 1.0), 1);
                if (std::abs(lhs - g_n(hp, t, m + 1)) > 1e-10) {
                    ok = false;
                    break;
                }
            }
    }

    for (int k = 0; k <= 200 && ok; ++k) {
        const double eps = 10.0 * k / 200.0;
        const double z = zeta_ratio(std::exp(eps));
        if (std::abs(std::log((1.0 + z) / (1.0 - z)) - eps) > 1e-12) ok = false;
        const std::array<double, 1> single{eps};
        if (std::abs(compose_heterogeneous(single).epsilon_out - eps) > 1e-12) ok = false;
    }
    const double elapsed = ms_since(start);
    report(7, "machinery identities", ok,
           "semigroup, shift identity, odds inversion, single-factor composition", elapsed);
}

// 8. Composition and purification guarantees measured on channels.
void criterion_privacy_soundness() {
    const auto start = Clock::now();
    std::mt19937_64 rng(substream(2024, 8));
    bool ok = true;

    const double eps = std::log(3.0);
    ok = qldp_check(depolarizing(2, 0.5), eps, 0.0).verdict == Containment::certified_in;
    for (int n = 1; n <= 5 && ok; ++n) {
        const QuantumChannel iterated = iterate(depolarizing(2, 0.5), n);
        for (double eps_prime : {0.3, 0.6, 1.0}) {
            const double slack = compose_homogeneous(eps, n, eps_prime).delta_out;
            for (int trial = 0; trial < 100; ++trial) {
                const DensityOperator rho = random_density(2, rng);
                const DensityOperator sigma = random_density(2, rng);
                const double out =
                    hs_divergence(apply_channel(iterated, rho), apply_channel(iterated, sigma),
                                  std::exp(eps_prime));
                if (out > slack + 1e-8) ok = false;
            }
        }
    }

    // Purification: (ln 2, 0.4)-private depolarizing noise with a full-rank
    // fixed point becomes exactly (ln 1.5, 0)-private after n repetitions.
    const double eps2 = std::log(2.0), delta2 = 0.4, eps_target = std::log(1.5);
    ok = ok && qldp_check(depolarizing(2, 0.4), eps2, delta2).verdict ==
                   Containment::certified_in;
    const long n_pure = purify_delta(eps2, delta2, eps_target, 0.5);
    const QuantumChannel purified = iterate(depolarizing(2, 0.4), static_cast<int>(n_pure));
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const DensityOperator rho = random_density(2, rng);
        const DensityOperator sigma = random_density(2, rng);
        if (hs_divergence(apply_channel(purified, rho), apply_channel(purified, sigma),
                          std::exp(eps_target)) > 1e-8)
            ok = false;
    }
    const double elapsed = ms_since(start);
    report(8, "privacy composition soundness", ok && elapsed < 30000.0,
           "homogeneous slack for n <= 5 and purification at n = " + std::to_string(n_pure),
           elapsed);
}

}  // namespace

int main() {
    criterion_figure_compare();
    criterion_tightness();
    criterion_mixing();
    criterion_dominance();
    criterion_sdpi_soundness();
    criterion_oracles();
    criterion_identities();
    criterion_privacy_soundness();
    if (g_failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
