#include "hsdp/io.hpp"

#include <cmath>
#include <fstream>

namespace hsdp {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back({m(i, j).real(), m(i, j).imag()});
    return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix: expected object with 'dim' and 'entries'");
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw ParseError("matrix: 'dim' must be a positive integer");
    const Eigen::Index dim = j["dim"].get<Eigen::Index>();
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim))
        throw ParseError("matrix: 'entries' must hold exactly dim^2 pairs");
    Matrix m(dim, dim);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j2 = 0; j2 < dim; ++j2, ++k) {
            const json& e = entries[k];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError("matrix: entry " + std::to_string(k) + " is not a [re, im] pair");
            const double re = e[0].get<double>(), im = e[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw ParseError("matrix: entry " + std::to_string(k) + " is not finite");
            m(i, j2) = Complex(re, im);
        }
    }
    return m;
}

json state_to_json(const DensityOperator& rho) {
    json j = matrix_to_json(rho.matrix());
    j["kind"] = "density";
    return j;
}

json channel_to_json(const QuantumChannel& n) {
    json kraus = json::array();
    for (const Matrix& k : n.kraus()) {
        json entries = json::array();
        for (Eigen::Index i = 0; i < k.rows(); ++i)
            for (Eigen::Index j = 0; j < k.cols(); ++j)
                entries.push_back({k(i, j).real(), k(i, j).imag()});
        kraus.push_back(std::move(entries));
    }
    return json{{"d_in", n.d_in()}, {"d_out", n.d_out()}, {"kraus", std::move(kraus)}};
}

json classical_to_json(const ClassicalChannel& w) {
    json rows = json::array();
    for (Eigen::Index x = 0; x < w.n_inputs(); ++x) {
        json row = json::array();
        for (Eigen::Index y = 0; y < w.n_outputs(); ++y) row.push_back(w.matrix()(x, y));
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}};
}

QuantumChannel channel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d_in") || !j.contains("d_out") || !j.contains("kraus"))
        throw ParseError("channel: expected object with 'd_in', 'd_out' and 'kraus'");
    const Eigen::Index d_in = j["d_in"].get<Eigen::Index>();
    const Eigen::Index d_out = j["d_out"].get<Eigen::Index>();
    if (d_in < 1 || d_out < 1) throw ParseError("channel: dimensions must be positive");
    const json& kraus_json = j["kraus"];
    if (!kraus_json.is_array() || kraus_json.empty())
        throw ParseError("channel: 'kraus' must be a non-empty array");
    std::vector<Matrix> kraus;
    kraus.reserve(kraus_json.size());
    for (const json& kj : kraus_json) {
        const json* entries = &kj;
        // Accept either a bare entry list or the full matrix object.
        if (kj.is_object()) {
            Matrix m = matrix_from_json(kj);
            if (m.rows() != d_out || m.cols() != d_in)
                throw ParseError("channel: Kraus matrix shape mismatch");
            kraus.push_back(std::move(m));
            continue;
        }
        if (!entries->is_array() || entries->size() != static_cast<std::size_t>(d_in * d_out))
            throw ParseError("channel: Kraus entry list must hold d_out*d_in pairs");
        Matrix m(d_out, d_in);
        std::size_t k = 0;
        for (Eigen::Index i = 0; i < d_out; ++i)
            for (Eigen::Index c = 0; c < d_in; ++c, ++k) {
                const json& e = (*entries)[k];
                if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                    throw ParseError("channel: Kraus entry is not a [re, im] pair");
                const double re = e[0].get<double>(), im = e[1].get<double>();
                if (!std::isfinite(re) || !std::isfinite(im))
                    throw ParseError("channel: Kraus entry is not finite");
                m(i, c) = Complex(re, im);
            }
        kraus.push_back(std::move(m));
    }
    try {
        return QuantumChannel(std::move(kraus));
    } catch (const ValidationError& err) {
        throw ParseError(std::string("channel: ") + err.what());
    }
}

ClassicalChannel classical_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw ParseError("classical channel: expected object with non-empty 'rows'");
    const json& rows = j["rows"];
    const std::size_t cols = rows[0].size();
    Eigen::MatrixXd w(rows.size(), cols);
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (!rows[x].is_array() || rows[x].size() != cols)
            throw ParseError("classical channel: ragged rows");
        for (std::size_t y = 0; y < cols; ++y) {
            if (!rows[x][y].is_number()) throw ParseError("classical channel: non-numeric entry");
            const double v = rows[x][y].get<double>();
            if (!std::isfinite(v)) throw ParseError("classical channel: non-finite entry");
            w(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = v;
        }
    }
    try {
        return ClassicalChannel(std::move(w));
    } catch (const ValidationError& err) {
        throw ParseError(std::string("classical channel: ") + err.what());
    }
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& err) {
        throw ParseError(path.string() + ": " + err.what());
    }
    return j;
}

void save_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

Matrix read_matrix_file(const std::filesystem::path& path) {
    return matrix_from_json(load_json_file(path));
}

DensityOperator read_state_file(const std::filesystem::path& path) {
    const json j = load_json_file(path);
    if (j.contains("kind") && j["kind"] != "density")
        throw ParseError(path.string() + ": 'kind' tag is not 'density'");
    return validate_density(matrix_from_json(j));
}

QuantumChannel read_channel_file(const std::filesystem::path& path) {
    return channel_from_json(load_json_file(path));
}

ClassicalChannel read_classical_file(const std::filesystem::path& path) {
    return classical_from_json(load_json_file(path));
}

}  // namespace hsdp
