// io.hpp
// JSON encoding: complex numbers as [re, im], matrices as row-major nested
// arrays, states as {"qubits": n, "amplitudes": [[re, im], ...]}.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "braidq/entanglement.hpp"
#include "braidq/matrix.hpp"
#include "braidq/quantum_state.hpp"
#include "braidq/representations.hpp"

namespace braidq {

using json = nlohmann::json;

inline json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a complex number as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const CMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline CMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        throw std::invalid_argument("expected a matrix as nested arrays of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
    }
    return m;
}

inline json to_json(const PureState& s) {
    json amps = json::array();
    for (const auto& a : s.amplitudes()) amps.push_back(to_json(a));
    return {{"qubits", s.qubits()}, {"amplitudes", std::move(amps)}};
}

inline PureState state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("qubits") || !j.contains("amplitudes")) {
        throw std::invalid_argument("state JSON needs \"qubits\" and \"amplitudes\"");
    }
    const int n = j.at("qubits").get<int>();
    const auto& arr = j.at("amplitudes");
    if (!arr.is_array()) throw std::invalid_argument("\"amplitudes\" must be an array");
    CVector amps;
    for (const auto& a : arr) amps.push_back(complex_from_json(a));
    return PureState(n, std::move(amps));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline json to_json(const RelationReport& r) {
    json far = json::array();
    for (const auto& c : r.far_commutation) far.push_back({{"i", c.i}, {"j", c.j}, {"residual", c.residual}});
    json braid = json::array();
    for (const auto& b : r.braiding) braid.push_back({{"i", b.i}, {"residual", b.residual}});
    return {{"far_commutation", far},
            {"braiding", braid},
            {"max_residual", r.max_residual},
            {"tolerance", r.tolerance},
            {"passed", r.passed}};
}

inline json to_json(const ProfileEntry& e) {
    json j{{"qubit", e.qubit}, {"outcome", e.outcome}, {"probability", e.probability}};
    j["concurrence"] = e.concurrence ? json(*e.concurrence) : json(nullptr);
    return j;
}

inline json to_json(const ResidualProfile& p) {
    json arr = json::array();
    for (const auto& e : p.entries) arr.push_back(to_json(e));
    return arr;
}

inline json to_json(const InvariantTable& t) {
    return {{"entropies", t.entropies},
            {"concurrences", {{"12", t.concurrences[0]}, {"13", t.concurrences[1]}, {"23", t.concurrences[2]}}},
            {"three_tangle", t.three_tangle}};
}

}  // namespace braidq
