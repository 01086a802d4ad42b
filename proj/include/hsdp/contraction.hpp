// contraction.hpp — Contraction coefficients for the hockey-stick divergence
// and membership certificates for the bounded-leakage channel class (output
// divergence at order gamma never above delta).

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hsdp/channels.hpp"
#include "hsdp/divergences.hpp"

namespace hsdp {

struct EstimatorBudget {
    int restarts = 64;
    int iters = 200;
    std::uint64_t seed = 0;
};

struct ContractionEstimate {
    double gamma;
    double lower_bound;  // certified: attained by the witness pair
    double upper_bound;  // Choi route plus the trivial bound 1
    std::optional<std::pair<PureState, PureState>> witness;
    int restarts_used;
};

// Exact classical contraction coefficient: maximum pairwise output
// divergence over ordered input pairs. O(|X|^2 |Y|).
double eta_classical_exact(const ClassicalChannel& w, double gamma);

// Lower bound on the quantum coefficient by seeded search over orthonormal
// pure-state pairs: canonical basis pairs first, then random restarts, each
// refined by coordinate-wise pattern search. Deterministic for a fixed seed.
// restarts = 0 evaluates the canonical |0>,|1> pair only.
ContractionEstimate eta_quantum_lower(const QuantumChannel& n, double gamma,
                                      const EstimatorBudget& budget = {});

// 1 - d_out * lambda_min(Choi), clamped to [0,1]. Upper bound on the
// contraction coefficient for every gamma >= 1.
double eta_upper_doeblin(const QuantumChannel& n);

// Any delta below this value is infeasible for the classical channel: the
// largest W(y|x') over zero entries W(y|x) = 0 and x' != x.
double classical_delta_lower_bound(const ClassicalChannel& w, double gamma);

// Best necessary bound 1 - min Tr[support(N(phi)) N(rho)] found by sampling
// the unit vector phi. Heuristic evidence; the inner minimization over
// states orthogonal to phi is solved exactly.
double quantum_necessary_delta_lower(const QuantumChannel& n, int samples, std::uint64_t seed);

enum class Containment { certified_in, certified_out, unknown };

enum class ContainmentReason {
    doeblin_choi,
    gamma_choi,
    depolarizing_threshold,
    classical_necessary,
    quantum_rank,
    estimator_witness,
    none,
};

struct ContainmentCertificate {
    Containment verdict;
    ContainmentReason reason;
    double evidence;
};

const char* to_string(Containment v);
const char* to_string(ContainmentReason r);

ContainmentCertificate containment_check(const QuantumChannel& n, double gamma, double delta,
                                         const EstimatorBudget& budget = {});

// Classical channels admit an exact verdict.
ContainmentCertificate containment_check(const ClassicalChannel& w, double gamma, double delta);

}  // namespace hsdp
