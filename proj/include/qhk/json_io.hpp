#pragma once

#include "qhk/alexander.hpp"
#include "qhk/quandle.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace qhk {

// File formats (schema 1):
//   quandle: {"schema":1, "order": n, "table": [[...]]}, 0-based, row-major,
//            table[a][b] = a*b
//   spec:    {"schema":1, "factors": [d1,...], "t": [[...]]}
// nlohmann keeps object keys sorted, so serialization is byte-stable.

inline nlohmann::json quandle_to_json(const FiniteQuandle& q) {
    nlohmann::json j;
    j["schema"] = 1;
    j["order"] = q.order();
    j["table"] = q.table();
    return j;
}

inline FiniteQuandle quandle_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw input_error("quandle json: expected an object with \"order\" and \"table\"");
    if (j.contains("schema") && j["schema"] != 1) throw input_error("quandle json: unsupported schema");
    long n = 0;
    std::vector<std::vector<long>> table;
    try {
        n = j["order"].get<long>();
        table = j["table"].get<std::vector<std::vector<long>>>();
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("quandle json: ") + e.what());
    }
    if (static_cast<long>(table.size()) != n) throw input_error("quandle json: order does not match table");
    return FiniteQuandle(std::move(table));
}

inline nlohmann::json spec_to_json(const AlexanderSpec& s) {
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json factors = nlohmann::json::array();
    for (const Int& d : s.factors) factors.push_back(static_cast<long long>(d));
    j["factors"] = std::move(factors);
    nlohmann::json t = nlohmann::json::array();
    for (long i = 0; i < s.t.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long jj = 0; jj < s.t.cols(); ++jj) row.push_back(static_cast<long long>(s.t(i, jj)));
        t.push_back(std::move(row));
    }
    j["t"] = std::move(t);
    return j;
}

inline AlexanderSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("factors") || !j.contains("t"))
        throw input_error("spec json: expected an object with \"factors\" and \"t\"");
    if (j.contains("schema") && j["schema"] != 1) throw input_error("spec json: unsupported schema");
    AlexanderSpec s;
    try {
        for (const auto& d : j["factors"]) s.factors.push_back(Int(d.get<long long>()));
        auto rows = j["t"].get<std::vector<std::vector<long long>>>();
        s.t = IntMatrix(static_cast<long>(rows.size()),
                        rows.empty() ? 0 : static_cast<long>(rows.front().size()));
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.front().size()) throw input_error("spec json: ragged t matrix");
            for (size_t k = 0; k < rows[i].size(); ++k) s.t(static_cast<long>(i), static_cast<long>(k)) = rows[i][k];
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("spec json: ") + e.what());
    }
    return s;
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qhk
