// hsdp_main.cpp — Command-line front end: divergence evaluation on state
// files, figure data as CSV, channel certificates, privacy calculators, and
// the seeded property-verification suites.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsdp/bounds.hpp"
#include "hsdp/contraction.hpp"
#include "hsdp/io.hpp"
#include "hsdp/privacy.hpp"
#include "hsdp/random.hpp"

using namespace hsdp;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

// Shortest round-trip decimal representation.
std::string csv_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string sig12(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.12g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << text;
}

// Flag > config file > built-in default; the JSON config uses the long flag
// names with dashes replaced by underscores.
class Config {
  public:
    void load(const std::string& path) {
        if (!path.empty()) cfg_ = load_json_file(path);
    }

    double number(const CLI::Option* opt, double cli_value, const std::string& key,
                  double fallback) const {
        if (opt->count() > 0) return cli_value;
        if (cfg_.contains(key) && cfg_[key].is_number()) return cfg_[key].get<double>();
        return fallback;
    }

    long integer(const CLI::Option* opt, long cli_value, const std::string& key,
                 long fallback) const {
        if (opt->count() > 0) return cli_value;
        if (cfg_.contains(key) && cfg_[key].is_number_integer()) return cfg_[key].get<long>();
        return fallback;
    }

    std::string text(const CLI::Option* opt, const std::string& cli_value,
                     const std::string& key, const std::string& fallback) const {
        if (opt->count() > 0) return cli_value;
        if (cfg_.contains(key) && cfg_[key].is_string()) return cfg_[key].get<std::string>();
        return fallback;
    }

    bool has(const std::string& key) const { return cfg_.contains(key); }

  private:
    json cfg_ = json::object();
};

// Canonical gamma from a --gamma/--eps flag pair; exactly one may be given.
double resolve_order(const Config& cfg, const CLI::Option* gamma_opt, double gamma_val,
                     const CLI::Option* eps_opt, double eps_val, const std::string& gamma_key,
                     const std::string& eps_key, double fallback_gamma) {
    if (gamma_opt->count() > 0 && eps_opt->count() > 0)
        throw BadRange("give exactly one of --" + gamma_key + " and --" + eps_key);
    if (gamma_opt->count() > 0) return gamma_val;
    if (eps_opt->count() > 0) return std::exp(eps_val);
    if (cfg.has(gamma_key) && cfg.has(eps_key))
        throw BadRange("config sets both " + gamma_key + " and " + eps_key);
    if (cfg.has(gamma_key)) return cfg.number(gamma_opt, 0, gamma_key, fallback_gamma);
    if (cfg.has(eps_key)) return std::exp(cfg.number(eps_opt, 0, eps_key, 0.0));
    return fallback_gamma;
}

std::uint64_t resolve_seed(const Config& cfg, const CLI::Option* opt, long cli_value) {
    if (opt->count() > 0) return static_cast<std::uint64_t>(cli_value);
    if (cfg.has("seed")) return static_cast<std::uint64_t>(cfg.integer(opt, 0, "seed", 0));
    if (const char* env = std::getenv("HSDP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw BadRange("HSDP_SEED is not an integer");
        }
    }
    return 0;
}

FGenerator generator_by_name(const std::string& name, double gamma0) {
    if (name == "kl") return make_kl();
    if (name == "tv") return make_total_variation();
    if (name == "chi2") return make_chi_squared();
    if (name == "hs") return make_hockey_stick(gamma0);
    throw BadRange("unknown generator '" + name + "' (use kl, tv, chi2 or hs)");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::bisection: return "bisection";
        default: return "quadrature";
    }
}

void print_value(const DivergenceValue& v) {
    std::cout << sig12(v.value) << "\n";
    std::cout << "method: " << to_string(v.method) << "\n";
}

// ------------------------------ figures -------------------------------

std::string figure_compare_csv(double gamma, double gamma_prime, double delta, long points) {
    if (points < 2) throw BadRange("figure compare: need at least 2 grid points");
    const double slope = linear_sdpi(gamma, gamma_prime, delta);
    std::string out = "t,dpi,linear,nonlinear\n";
    for (long i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        const double nl = nonlinear_sdpi({gamma, gamma_prime, delta, t});
        out += csv_number(t) + "," + csv_number(t) + "," + csv_number(slope * t) + "," +
               csv_number(nl) + "\n";
    }
    return out;
}

std::string figure_mixing_csv(double gamma, double gamma_prime, double delta, double beta_start,
                              double beta_stop, long points) {
    if (points < 2) throw BadRange("figure mixing: need at least 2 grid points");
    std::string out = "beta,linear,nonlinear\n";
    for (long i = 0; i < points; ++i) {
        const double beta = beta_start + (beta_stop - beta_start) * static_cast<double>(i) /
                                             static_cast<double>(points - 1);
        const std::optional<long> lin = mixing_time_linear(gamma, gamma_prime, delta, beta);
        const long nl = mixing_time_nonlinear(gamma, gamma_prime, beta);
        out += csv_number(beta) + ",";
        if (lin) out += std::to_string(*lin);
        out += "," + std::to_string(nl) + "\n";
    }
    return out;
}

std::string figure_revpinsker_csv(const std::string& mode, double tau, double delta,
                                  double lambda, long points) {
    if (points < 2) throw BadRange("figure revpinsker: need at least 2 grid points");
    std::string out = "x";
    if (mode == "eps") {
        const double deltas[] = {0.1, 0.2, 0.3};
        for (double d : deltas) out += ",ours_d" + csv_number(d) + ",prior_d" + csv_number(d);
        out += "\n";
        for (long i = 0; i < points; ++i) {
            const double eps =
                0.5 + 2.5 * static_cast<double>(i) / static_cast<double>(points - 1);
            out += csv_number(eps);
            for (double d : deltas) {
                out += "," + csv_number(re_ldp_bound(eps, d, tau, lambda));
                out += "," + csv_number(dasgupta_bound(eps, d, tau, lambda));
            }
            out += "\n";
        }
        return out;
    }
    if (mode == "lambda") {
        const double epsilons[] = {1.0, 2.0, 3.0};
        for (double e : epsilons) out += ",ours_e" + csv_number(e) + ",prior_e" + csv_number(e);
        out += "\n";
        for (long i = 0; i < points; ++i) {
            const double x =
                0.02 + (0.5 - 0.02) * static_cast<double>(i) / static_cast<double>(points - 1);
            out += csv_number(x);
            for (double e : epsilons) {
                out += "," + csv_number(re_ldp_bound(e, delta, tau, x));
                out += "," + csv_number(dasgupta_bound(e, delta, tau, x));
            }
            out += "\n";
        }
        return out;
    }
    throw BadRange("figure revpinsker: mode must be 'eps' or 'lambda'");
}

const char* kGnuplotScript =
    "# gnuplot helpers for the CSV figures\n"
    "set datafile separator ','\n"
    "set key top left\n"
    "# data-processing comparison:\n"
    "#   plot 'compare.csv' using 1:2 with lines title 'DPI', \\\n"
    "#        '' using 1:3 with lines title 'linear', \\\n"
    "#        '' using 1:4 with lines title 'non-linear'\n"
    "# mixing-time comparison:\n"
    "#   plot 'mixing.csv' using 1:2 with steps title 'linear', \\\n"
    "#        '' using 1:3 with steps title 'non-linear'\n"
    "# privacy bound comparison:\n"
    "#   plot 'revpinsker.csv' using 1:2 with lines title 'ours', \\\n"
    "#        '' using 1:3 with lines dashtype 2 title 'prior'\n";

// ------------------------------ verify --------------------------------

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
};

void dump_counterexample(const json& j) {
    std::cerr << "counterexample:\n" << j.dump(2) << "\n";
}

SuiteResult verify_dpi(std::uint64_t seed, long trials) {
    SuiteResult r{"dpi"};
    std::mt19937_64 rng(substream(seed, 1));
    for (long trial = 0; trial < trials; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const QuantumChannel n = random_channel(d, d, 2, rng);
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        for (double g : {1.0, 1.5, 2.0, 5.0}) {
            const double in = hs_divergence(rho, sigma, g);
            const double out =
                hs_divergence(apply_channel(n, rho), apply_channel(n, sigma), g);
            ++r.checks;
            if (out > in + 1e-9) {
                ++r.failures;
                dump_counterexample({{"suite", r.name},
                                     {"gamma", g},
                                     {"channel", channel_to_json(n)},
                                     {"rho", state_to_json(rho)},
                                     {"sigma", state_to_json(sigma)},
                                     {"in", in},
                                     {"out", out}});
            }
        }
    }
    return r;
}

SuiteResult verify_sdpi(std::uint64_t seed, long trials, bool inject_fault) {
    SuiteResult r{"sdpi-soundness"};
    std::mt19937_64 rng(substream(seed, 2));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double sabotage = inject_fault ? 0.05 : 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        const Eigen::Index d = 2 + trial % 3;
        const QuantumChannel n = random_channel(d, d, d, rng);
        const double gamma = 1.0 + 5.0 * uni(rng);
        const double delta = std::min(1.0, eta_upper_doeblin(n) + 1e-12);
        const ContainmentCertificate cert = containment_check(n, gamma, delta, {2, 10, seed});
        if (cert.verdict != Containment::certified_in) continue;
        const double gp = 1.0 + (gamma - 1.0) * uni(rng);
        const DensityOperator rho = random_density(d, rng);
        const DensityOperator sigma = random_density(d, rng);
        const double in = hs_divergence(rho, sigma, gp);
        const double out = hs_divergence(apply_channel(n, rho), apply_channel(n, sigma), gp);
        const double nl = nonlinear_sdpi({gamma, gp, delta, in}) - sabotage;
        const double lin = linear_sdpi(gamma, gp, delta) * in;
        ++r.checks;
        if (out > nl + 1e-8 || nl > lin + sabotage + 1e-8) {
            ++r.failures;
            dump_counterexample({{"suite", r.name},
                                 {"gamma", gamma},
                                 {"gamma_prime", gp},
                                 {"delta", delta},
                                 {"channel", channel_to_json(n)},
                                 {"rho", state_to_json(rho)},
                                 {"sigma", state_to_json(sigma)},
                                 {"in", in},
                                 {"out", out},
                                 {"nonlinear", nl},
                                 {"linear_times_in", lin}});
        }
    }
    return r;
}

SuiteResult verify_tightness() {
    SuiteResult r{"tightness-grid"};
    for (const auto& [g, gp] :
         std::vector<std::pair<double, double>>{{4.0, 2.0}, {6.0, 2.5}, {10.0, 1.5}}) {
        for (int k = 0; k < 10; ++k) {
            const double t = static_cast<double>(k) / 9.0;
            const double delta = k % 2 == 0 ? 0.0 : 0.3;
            if (delta > 0.0 && t < (gp - 1.0) / (g - 1.0)) continue;
            const double s = (1.0 - t) / gp;
            Eigen::VectorXd probs(2);
            probs << s, 1.0 - s;
            const TightnessReport report =
                tightness_check(g, gp, delta, basis_state(2, 0), diagonal_state(probs), 1e-9);
            ++r.checks;
            if (!report.passed) {
                ++r.failures;
                dump_counterexample({{"suite", r.name},
                                     {"gamma", g},
                                     {"gamma_prime", gp},
                                     {"delta", delta},
                                     {"t", report.input_divergence},
                                     {"channel_value", report.channel_value},
                                     {"bound_value", report.bound_value}});
            }
        }
    }
    return r;
}

SuiteResult verify_semigroup(std::uint64_t seed, long trials) {
    SuiteResult r{"composition-semigroup"};
    std::mt19937_64 rng(substream(seed, 3));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (long triple = 0; triple < std::min<long>(trials, 10); ++triple) {
        const double gp = 1.05 + 2.0 * uni(rng);
        const double g = gp + 0.3 + 4.0 * uni(rng);
        const double delta = 0.02 + 0.9 * uni(rng);
        const HittingTimeParams hp = hitting_params(g, gp, delta);
        for (int m = 1; m <= 20; ++m) {
            for (int k = 0; k <= 100; ++k) {
                const double t = k / 100.0;
                const double lhs = g_n(hp, std::clamp(g_n(hp, t, m), 0.0, 1.0), 1);
                const double rhs = g_n(hp, t, m + 1);
                ++r.checks;
                if (std::abs(lhs - rhs) > 1e-10) {
                    ++r.failures;
                    dump_counterexample({{"suite", r.name},
                                         {"gamma", g},
                                         {"gamma_prime", gp},
                                         {"delta", delta},
                                         {"t", t},
                                         {"m", m}});
                }
            }
        }
    }
    return r;
}

SuiteResult verify_privacy(std::uint64_t seed, long trials) {
    SuiteResult r{"privacy-soundness"};
    std::mt19937_64 rng(substream(seed, 4));
    const double eps = std::log(3.0);
    for (int n = 1; n <= 5; ++n) {
        const QuantumChannel iterated = iterate(depolarizing(2, 0.5), n);
        for (double eps_prime : {0.3, 0.6, 1.0}) {
            const double slack = compose_homogeneous(eps, n, eps_prime).delta_out;
            for (long trial = 0; trial < std::max<long>(1, trials / 15); ++trial) {
                const DensityOperator rho = random_density(2, rng);
                const DensityOperator sigma = random_density(2, rng);
                const double out =
                    hs_divergence(apply_channel(iterated, rho), apply_channel(iterated, sigma),
                                  std::exp(eps_prime));
                ++r.checks;
                if (out > slack + 1e-8) {
                    ++r.failures;
                    dump_counterexample({{"suite", r.name},
                                         {"n", n},
                                         {"eps_prime", eps_prime},
                                         {"rho", state_to_json(rho)},
                                         {"sigma", state_to_json(sigma)},
                                         {"out", out},
                                         {"slack", slack}});
                }
            }
        }
    }
    return r;
}

int run_verify(std::uint64_t seed, long trials, bool inject_fault) {
    if (trials == 0) {
        std::cout << "warning: 0 checks requested; nothing verified\n";
        return kExitOk;
    }
    std::vector<SuiteResult> results;
    results.push_back(verify_dpi(seed, trials));
    results.push_back(verify_sdpi(seed, trials, inject_fault));
    results.push_back(verify_tightness());
    results.push_back(verify_semigroup(seed, trials));
    results.push_back(verify_privacy(seed, trials));
    long failures = 0;
    for (const SuiteResult& r : results) {
        std::cout << r.name << ": " << r.checks << " checks, "
                  << (r.failures == 0 ? "all passed" : std::to_string(r.failures) + " FAILED")
                  << "\n";
        failures += r.failures;
    }
    return failures == 0 ? kExitOk : kExitPropertyFailure;
}

// ------------------------------- main ---------------------------------

// Pulls "--config <path>" or "--config=<path>" out of the argument list; it
// is accepted in any position, including after subcommands.
std::vector<std::string> extract_config(int argc, char** argv, std::string& config_path) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config") {
            if (i + 1 >= argc) throw BadRange("--config expects a path");
            config_path = argv[++i];
        } else if (arg.rfind("--config=", 0) == 0) {
            config_path = arg.substr(9);
        } else {
            args.push_back(arg);
        }
    }
    return args;
}

int run(int argc, char** argv) {
    CLI::App app{"hockey-stick divergence toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    const std::vector<std::string> args = extract_config(argc, argv, config_path);

    Config cfg;

    // ---- div ----
    CLI::App* div = app.add_subcommand("div", "divergence evaluation on state files");
    div->require_subcommand(1);
    std::string rho_path, sigma_path;
    double gamma_val = 0, eps_val = 0, delta_val = 0, quad_tol_val = 1e-8, gamma0_val = 2.0;
    std::string gen_name = "kl";

    auto add_states = [&](CLI::App* cmd) {
        cmd->add_option("--rho", rho_path, "first state file")->required();
        cmd->add_option("--sigma", sigma_path, "second state file")->required();
    };

    CLI::App* egamma = div->add_subcommand("egamma", "hockey-stick divergence");
    add_states(egamma);
    CLI::Option* eg_gamma = egamma->add_option("--gamma", gamma_val, "order parameter");
    CLI::Option* eg_eps = egamma->add_option("--eps", eps_val, "order as e^eps");

    CLI::App* trace = div->add_subcommand("trace", "trace distance");
    add_states(trace);

    CLI::App* dmax_cmd = div->add_subcommand("dmax", "max-relative entropy");
    add_states(dmax_cmd);

    CLI::App* smooth = div->add_subcommand("smooth-dmax", "smoothed max-relative entropy");
    add_states(smooth);
    CLI::Option* sm_delta = smooth->add_option("--delta", delta_val, "smoothing level");

    CLI::App* fdiv = div->add_subcommand("fdiv", "f-divergence by quadrature");
    add_states(fdiv);
    CLI::Option* fd_gen = fdiv->add_option("--f", gen_name, "generator: kl, tv, chi2, hs");
    CLI::Option* fd_gamma0 = fdiv->add_option("--gamma0", gamma0_val, "order for --f hs");
    CLI::Option* fd_tol = fdiv->add_option("--quad-tol", quad_tol_val, "quadrature tolerance");

    // ---- figure ----
    CLI::App* figure = app.add_subcommand("figure", "figure reproduction as CSV");
    figure->require_subcommand(1);
    double fg_gamma = 0, fg_eps = 0, fg_gamma_prime = 0, fg_eps_prime = 0, fg_delta = 0;
    double beta_start = 0.0, beta_stop = 1.0, tau_val = 0.25, lambda_val = 0.1;
    long points_val = 0;
    std::string output_path = "-", mode_val = "eps";

    CLI::App* compare = figure->add_subcommand("compare", "data-processing comparison");
    CLI::Option* cp_gamma = compare->add_option("--gamma", fg_gamma, "class parameter");
    CLI::Option* cp_eps = compare->add_option("--eps", fg_eps, "class parameter as e^eps");
    CLI::Option* cp_gp = compare->add_option("--gamma-prime", fg_gamma_prime, "evaluated order");
    CLI::Option* cp_ep = compare->add_option("--eps-prime", fg_eps_prime, "order as e^eps");
    CLI::Option* cp_delta = compare->add_option("--delta", fg_delta, "class leakage");
    CLI::Option* cp_points = compare->add_option("--points", points_val, "grid points");
    CLI::Option* cp_out = compare->add_option("--output", output_path, "CSV path or -");

    CLI::App* mixing = figure->add_subcommand("mixing", "mixing-time comparison");
    CLI::Option* mx_gamma = mixing->add_option("--gamma", fg_gamma, "class parameter");
    CLI::Option* mx_eps = mixing->add_option("--eps", fg_eps, "class parameter as e^eps");
    CLI::Option* mx_gp = mixing->add_option("--gamma-prime", fg_gamma_prime, "evaluated order");
    CLI::Option* mx_ep = mixing->add_option("--eps-prime", fg_eps_prime, "order as e^eps");
    CLI::Option* mx_delta = mixing->add_option("--delta", fg_delta, "class leakage");
    CLI::Option* mx_bstart = mixing->add_option("--beta-start", beta_start, "grid start");
    CLI::Option* mx_bstop = mixing->add_option("--beta-stop", beta_stop, "grid stop");
    CLI::Option* mx_points = mixing->add_option("--points", points_val, "grid points");
    CLI::Option* mx_out = mixing->add_option("--output", output_path, "CSV path or -");

    CLI::App* revpin = figure->add_subcommand("revpinsker", "privacy bound comparison");
    CLI::Option* rp_mode = revpin->add_option("--mode", mode_val, "sweep: eps or lambda");
    CLI::Option* rp_tau = revpin->add_option("--tau", tau_val, "trace distance level");
    CLI::Option* rp_delta = revpin->add_option("--delta", fg_delta, "slack for lambda sweep");
    CLI::Option* rp_lambda = revpin->add_option("--lambda", lambda_val, "floor for eps sweep");
    CLI::Option* rp_points = revpin->add_option("--points", points_val, "grid points");
    CLI::Option* rp_out = revpin->add_option("--output", output_path, "CSV path or -");

    CLI::App* script = figure->add_subcommand("script", "print a gnuplot script");

    // ---- privacy ----
    CLI::App* privacy = app.add_subcommand("privacy", "privacy calculators");
    privacy->require_subcommand(1);
    double pr_eps = 0, pr_eps_prime = 0, pr_delta = 0, pr_lambda = 0.1, pr_m = 0,
           pr_tau = 0.25;
    long pr_n = 1;
    std::vector<double> pr_eps_list;

    CLI::App* compose_cmd = privacy->add_subcommand("compose", "homogeneous composition");
    CLI::Option* co_eps = compose_cmd->add_option("--eps", pr_eps, "per-channel eps")->required();
    CLI::Option* co_ep =
        compose_cmd->add_option("--eps-prime", pr_eps_prime, "target eps")->required();
    CLI::Option* co_n = compose_cmd->add_option("--n", pr_n, "repetitions")->required();

    CLI::App* hetero = privacy->add_subcommand("compose-hetero", "heterogeneous composition");
    hetero->add_option("--eps", pr_eps_list, "eps of each factor (repeatable)")->required();

    CLI::App* epsdelta = privacy->add_subcommand("compose-epsdelta", "composition with slack");
    epsdelta->add_option("--eps", pr_eps, "per-channel eps")->required();
    epsdelta->add_option("--delta", pr_delta, "per-channel slack")->required();
    epsdelta->add_option("--eps-prime", pr_eps_prime, "target eps")->required();
    epsdelta->add_option("--n", pr_n, "repetitions")->required();

    CLI::App* purify = privacy->add_subcommand("purify", "repetitions to reach zero slack");
    purify->add_option("--eps", pr_eps, "channel eps")->required();
    purify->add_option("--delta", pr_delta, "channel slack")->required();
    purify->add_option("--eps-prime", pr_eps_prime, "target eps")->required();
    purify->add_option("--lambda-min", pr_lambda, "fixed-point floor")->required();

    CLI::App* bound_re = privacy->add_subcommand("bound-re", "relative-entropy bound");
    bound_re->add_option("--eps", pr_eps, "channel eps")->required();
    bound_re->add_option("--delta", pr_delta, "channel slack")->required();
    CLI::Option* br_tau = bound_re->add_option("--tau", pr_tau, "input trace distance");
    CLI::Option* br_lambda = bound_re->add_option("--lambda", pr_lambda, "output floor");
    CLI::Option* br_m = bound_re->add_option("--m", pr_m, "also print the prior bound at m");

    // ---- channel ----
    CLI::App* channel = app.add_subcommand("channel", "channel certificates");
    channel->require_subcommand(1);
    std::string channel_path;
    double ch_gamma = 0, ch_eps = 0, ch_delta = 0;
    long restarts_val = 64, iters_val = 200, seed_val = 0;

    CLI::App* certify = channel->add_subcommand("certify", "class membership certificate");
    certify->add_option("--channel", channel_path, "channel file")->required();
    CLI::Option* ce_gamma = certify->add_option("--gamma", ch_gamma, "class parameter");
    CLI::Option* ce_eps = certify->add_option("--eps", ch_eps, "class parameter as e^eps");
    CLI::Option* ce_delta = certify->add_option("--delta", ch_delta, "class leakage");
    CLI::Option* ce_restarts =
        certify->add_option("--restarts", restarts_val, "search restarts");
    CLI::Option* ce_iters = certify->add_option("--iters", iters_val, "refinement steps");
    CLI::Option* ce_seed = certify->add_option("--seed", seed_val, "search seed");

    // ---- verify ----
    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    long vf_trials = 200;
    bool inject_fault = false;
    CLI::Option* vf_seed_opt = verify->add_option("--seed", seed_val, "master seed");
    CLI::Option* vf_trials_opt = verify->add_option("--trials", vf_trials, "trial count");
    verify->add_flag("--inject-fault", inject_fault,
                     "sabotage one bound to exercise the failure path");

    // CLI11 takes the argument list reversed.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cfg.load(config_path);

    if (egamma->parsed()) {
        const double gamma =
            resolve_order(cfg, eg_gamma, gamma_val, eg_eps, eps_val, "gamma", "eps", 1.0);
        print_value({hs_divergence(read_state_file(rho_path), read_state_file(sigma_path),
                                   gamma),
                     Method::closed_form});
        return kExitOk;
    }
    if (trace->parsed()) {
        print_value({trace_distance(read_state_file(rho_path), read_state_file(sigma_path)),
                     Method::closed_form});
        return kExitOk;
    }
    if (dmax_cmd->parsed()) {
        print_value({d_max(read_state_file(rho_path), read_state_file(sigma_path)),
                     Method::closed_form});
        return kExitOk;
    }
    if (smooth->parsed()) {
        const double delta = cfg.number(sm_delta, delta_val, "delta", 0.0);
        print_value({smooth_d_max(read_state_file(rho_path), read_state_file(sigma_path),
                                  delta),
                     Method::bisection});
        return kExitOk;
    }
    if (fdiv->parsed()) {
        const std::string gen = cfg.text(fd_gen, gen_name, "f", "kl");
        const double gamma0 = cfg.number(fd_gamma0, gamma0_val, "gamma0", 2.0);
        const double tol = cfg.number(fd_tol, quad_tol_val, "quad_tol", 1e-8);
        print_value({f_divergence(read_state_file(rho_path), read_state_file(sigma_path),
                                  generator_by_name(gen, gamma0), tol),
                     Method::quadrature});
        return kExitOk;
    }

    if (compare->parsed()) {
        const double g =
            resolve_order(cfg, cp_gamma, fg_gamma, cp_eps, fg_eps, "gamma", "eps", 6.0);
        const double gp = resolve_order(cfg, cp_gp, fg_gamma_prime, cp_ep, fg_eps_prime,
                                        "gamma_prime", "eps_prime", 2.5);
        const double d = cfg.number(cp_delta, fg_delta, "delta", 0.01);
        const long pts = cfg.integer(cp_points, points_val, "points", 201);
        write_text(cfg.text(cp_out, output_path, "output", "-"),
                   figure_compare_csv(g, gp, d, pts));
        return kExitOk;
    }
    if (mixing->parsed()) {
        const double g =
            resolve_order(cfg, mx_gamma, fg_gamma, mx_eps, fg_eps, "gamma", "eps", 8.0);
        const double gp = resolve_order(cfg, mx_gp, fg_gamma_prime, mx_ep, fg_eps_prime,
                                        "gamma_prime", "eps_prime", 3.0);
        const double d = cfg.number(mx_delta, fg_delta, "delta", 0.0);
        const double b0 = cfg.number(mx_bstart, beta_start, "beta_start", 0.0);
        const double b1 = cfg.number(mx_bstop, beta_stop, "beta_stop", 1.0);
        const long pts = cfg.integer(mx_points, points_val, "points", 101);
        write_text(cfg.text(mx_out, output_path, "output", "-"),
                   figure_mixing_csv(g, gp, d, b0, b1, pts));
        return kExitOk;
    }
    if (revpin->parsed()) {
        const std::string mode = cfg.text(rp_mode, mode_val, "mode", "eps");
        const double tau = cfg.number(rp_tau, tau_val, "tau", 0.25);
        const double d = cfg.number(rp_delta, fg_delta, "delta", 0.01);
        const double lam = cfg.number(rp_lambda, lambda_val, "lambda", 0.1);
        const long pts = cfg.integer(rp_points, points_val, "points", 50);
        write_text(cfg.text(rp_out, output_path, "output", "-"),
                   figure_revpinsker_csv(mode, tau, d, lam, pts));
        return kExitOk;
    }
    if (script->parsed()) {
        std::cout << kGnuplotScript;
        return kExitOk;
    }

    if (compose_cmd->parsed()) {
        const CompositionResult r =
            compose_homogeneous(cfg.number(co_eps, pr_eps, "eps", 0.0),
                                static_cast<int>(cfg.integer(co_n, pr_n, "n", 1)),
                                cfg.number(co_ep, pr_eps_prime, "eps_prime", 0.0));
        std::cout << "eps_out: " << sig12(r.epsilon_out) << "\n"
                  << "delta_out: " << sig12(r.delta_out) << "\n"
                  << "rule: homogeneous_min\n";
        return kExitOk;
    }
    if (hetero->parsed()) {
        const CompositionResult r = compose_heterogeneous(pr_eps_list);
        std::cout << "eps_out: " << sig12(r.epsilon_out) << "\n"
                  << "delta_out: 0\n"
                  << "odds_ratio: " << sig12(r.raw_ratio) << "\n"
                  << "rule: heterogeneous_zeta\n";
        return kExitOk;
    }
    if (epsdelta->parsed()) {
        const CompositionResult r =
            compose_eps_delta(pr_eps, pr_delta, static_cast<int>(pr_n), pr_eps_prime);
        std::cout << "eps_out: " << sig12(r.epsilon_out) << "\n"
                  << "delta_out: " << sig12(r.delta_out) << "\n"
                  << "rule: eps_delta_power\n";
        return kExitOk;
    }
    if (purify->parsed()) {
        std::cout << "n: " << purify_delta(pr_eps, pr_delta, pr_eps_prime, pr_lambda) << "\n"
                  << "rule: purification\n";
        return kExitOk;
    }
    if (bound_re->parsed()) {
        const double tau = cfg.number(br_tau, pr_tau, "tau", 0.25);
        const double lam = cfg.number(br_lambda, pr_lambda, "lambda", 0.1);
        std::cout << "bound: " << sig12(re_ldp_bound(pr_eps, pr_delta, tau, lam)) << "\n";
        if (br_m->count() > 0 || cfg.has("m")) {
            const double m = cfg.number(br_m, pr_m, "m", lam);
            std::cout << "prior: " << sig12(dasgupta_bound(pr_eps, pr_delta, tau, m)) << "\n";
        }
        return kExitOk;
    }

    if (certify->parsed()) {
        const double gamma =
            resolve_order(cfg, ce_gamma, ch_gamma, ce_eps, ch_eps, "gamma", "eps", 1.0);
        const double delta = cfg.number(ce_delta, ch_delta, "delta", 0.0);
        EstimatorBudget budget;
        budget.restarts =
            static_cast<int>(cfg.integer(ce_restarts, restarts_val, "restarts", 64));
        budget.iters = static_cast<int>(cfg.integer(ce_iters, iters_val, "iters", 200));
        budget.seed = resolve_seed(cfg, ce_seed, seed_val);
        const ContainmentCertificate cert =
            containment_check(read_channel_file(channel_path), gamma, delta, budget);
        std::cout << "verdict: " << to_string(cert.verdict) << "\n"
                  << "reason: " << to_string(cert.reason) << "\n"
                  << "evidence: " << sig12(cert.evidence) << "\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        const std::uint64_t seed = resolve_seed(cfg, vf_seed_opt, seed_val);
        const long trials = cfg.integer(vf_trials_opt, vf_trials, "trials", 200);
        if (trials < 0) throw BadRange("verify: trials must be >= 0");
        return run_verify(seed, trials, inject_fault);
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            CLI::App app;
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
