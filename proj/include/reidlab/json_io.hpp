#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "complex_matrix.hpp"
#include "inequalities.hpp"
#include "spectra.hpp"
#include "tolerance.hpp"

namespace reidlab {

using Json = nlohmann::ordered_json;

/// Matrix wire format: {"dim": n, "data": [[[re,im], ...], ...]}, data
/// row-major with exactly n rows of n pairs.
inline Json to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j)
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return Json{{"dim", m.dim()}, {"data", std::move(rows)}};
}

/// Vector wire format: {"dim": n, "data": [[re,im], ...]}.
inline Json to_json(const Vector& x) {
    Json data = Json::array();
    for (std::size_t i = 0; i < x.size(); ++i)
        data.push_back(Json::array({x[i].real(), x[i].imag()}));
    return Json{{"dim", x.size()}, {"data", std::move(data)}};
}

inline ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("data"))
        throw ValueError("matrix JSON: expected {\"dim\": n, \"data\": [...]}");
    std::size_t n = j.at("dim").get<std::size_t>();
    const Json& data = j.at("data");
    if (!data.is_array() || data.size() != n)
        throw DimensionError("matrix JSON: data must have exactly dim rows");
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = data.at(i);
        if (!row.is_array() || row.size() != n)
            throw DimensionError("matrix JSON: each row must have exactly dim [re,im] pairs");
        for (std::size_t k = 0; k < n; ++k) {
            const Json& pair = row.at(k);
            if (!pair.is_array() || pair.size() != 2)
                throw ValueError("matrix JSON: entries must be [re,im] pairs");
            m(i, k) = Complex{pair.at(0).get<double>(), pair.at(1).get<double>()};
        }
    }
    m.check_finite();
    return m;
}

inline Vector vector_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("data"))
        throw ValueError("vector JSON: expected {\"dim\": n, \"data\": [...]}");
    std::size_t n = j.at("dim").get<std::size_t>();
    const Json& data = j.at("data");
    if (!data.is_array() || data.size() != n)
        throw DimensionError("vector JSON: data must have exactly dim entries");
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& pair = data.at(i);
        if (!pair.is_array() || pair.size() != 2)
            throw ValueError("vector JSON: entries must be [re,im] pairs");
        x[i] = Complex{pair.at(0).get<double>(), pair.at(1).get<double>()};
    }
    x.check_finite();
    return x;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValueError("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

inline Json to_json(const ToleranceProfile& p) {
    return Json{{"predicate_tol", p.predicate_tol},
                {"rank_tol", p.rank_tol},
                {"gelfand_tol", p.gelfand_tol},
                {"gelfand_max_squarings", p.gelfand_max_squarings},
                {"jacobi_tol", p.jacobi_tol},
                {"jacobi_max_sweeps", p.jacobi_max_sweeps}};
}

inline Json to_json(const Margin& m) {
    Json j{{"lhs", m.lhs}, {"rhs", m.rhs}, {"margin", m.margin}};
    if (!m.witness.empty()) j["witness"] = to_json(m.witness);
    return j;
}

inline Json to_json(const GelfandTrace& t) {
    Json iterates = Json::array();
    for (std::size_t k = 0; k < t.iterates.size(); ++k)
        iterates.push_back(Json{{"k", k}, {"r_k", t.iterates[k]}});
    return Json{{"iterates", std::move(iterates)},
                {"converged", t.converged},
                {"radius", t.radius}};
}

} // namespace reidlab
