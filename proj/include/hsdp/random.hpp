// random.hpp — Seeded generation of states, unitaries and channels for
// property suites. Haar measure through Gaussian matrices plus QR.

#pragma once

#include <cstdint>
#include <random>

#include "hsdp/channels.hpp"

namespace hsdp {

// Independent stream for trial `index` under a master seed.
std::uint64_t substream(std::uint64_t seed, std::uint64_t index);

Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

// Haar-distributed unitary (QR of a Gaussian matrix with phase fixing).
Matrix haar_unitary(Eigen::Index d, std::mt19937_64& rng);

PureState random_pure(Eigen::Index d, std::mt19937_64& rng);

// Full-rank mixed state (normalized Wishart).
DensityOperator random_density(Eigen::Index d, std::mt19937_64& rng);

Hermitian random_hermitian(Eigen::Index d, std::mt19937_64& rng);

// Stinespring dilation with a Haar-random isometry; env_dim Kraus operators.
QuantumChannel random_channel(Eigen::Index d_in, Eigen::Index d_out, Eigen::Index env_dim,
                              std::mt19937_64& rng);

// Random row-stochastic kernel.
ClassicalChannel random_classical(Eigen::Index n_in, Eigen::Index n_out, std::mt19937_64& rng);

// Random probability vector.
Eigen::VectorXd random_distribution(Eigen::Index n, std::mt19937_64& rng);

}  // namespace hsdp
