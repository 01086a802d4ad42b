// io.hpp — JSON file formats for matrices, states and channels.
//
// Matrix:            {"dim": n, "entries": [[re, im], ...]} row-major
// State:             matrix object plus {"kind": "density"}
// Quantum channel:   {"d_in": n, "d_out": m, "kraus": [matrix, ...]}
// Classical channel: {"rows": [[...], ...]}

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hsdp/channels.hpp"

namespace hsdp {

nlohmann::json matrix_to_json(const Matrix& m);

// Rejects wrong-length entry arrays and non-finite values with ParseError.
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityOperator& rho);
nlohmann::json channel_to_json(const QuantumChannel& n);
nlohmann::json classical_to_json(const ClassicalChannel& w);

QuantumChannel channel_from_json(const nlohmann::json& j);
ClassicalChannel classical_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const nlohmann::json& j);

Matrix read_matrix_file(const std::filesystem::path& path);
DensityOperator read_state_file(const std::filesystem::path& path);
QuantumChannel read_channel_file(const std::filesystem::path& path);
ClassicalChannel read_classical_file(const std::filesystem::path& path);

}  // namespace hsdp
