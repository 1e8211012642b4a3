#pragma once

#include "phdet/detvar/model.hpp"
#include "phdet/indexcalc/formulas.hpp"
#include "phdet/polyalg/parser.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace phdet::cli {

/// Schema or content error in a workbench input file (exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SingularitySource {
    Point point;
    std::optional<std::size_t> n, p, t;
    std::optional<int> d;
    std::optional<bool> smoothable;
    std::optional<long long> mu, chi_smoothing, chi_lower_stratum;
};

enum class FormKind { none, cstar, explicit_coefficients };

struct WorkbenchInput {
    VariableList variables;
    std::vector<std::vector<std::string>> matrix_text;
    std::size_t t = 0;
    Ambient ambient;
    std::optional<std::vector<long long>> weights;
    std::vector<SingularitySource> singularities;
    FormKind form = FormKind::none;
    std::vector<std::string> form_coefficients;
    std::optional<long long> chi_x;
    std::vector<std::pair<Point, long long>> known_indices;
};

namespace detail {

using nlohmann::json;

inline void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw InputError("unknown key '" + key + "' in " + where);
    }
}

inline const json& required(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError("missing key '" + std::string(key) + "' in " + where);
    return *it;
}

inline long long as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw InputError(where + " must be an integer");
    return v.get<long long>();
}

inline std::size_t as_count(const json& v, const std::string& where) {
    long long x = as_int(v, where);
    if (x < 0) throw InputError(where + " must be non-negative");
    return static_cast<std::size_t>(x);
}

inline std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(where + " must be a string");
    return v.get<std::string>();
}

inline Point as_point(const json& v, const std::string& where) {
    try {
        return Point::parse(as_string(v, where));
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
}

template <class T, class F>
std::optional<T> optional_field(const json& obj, const char* key, F convert) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return convert(*it);
}

}  // namespace detail

inline WorkbenchInput parse_input(const nlohmann::json& doc) {
    using namespace detail;
    only_keys(doc, {"schema_version", "variables", "matrix", "t", "ambient", "weights", "singularities", "form", "known"},
              "input");
    if (as_int(required(doc, "schema_version", "input"), "schema_version") != 1)
        throw InputError("unsupported schema_version (expected 1)");

    WorkbenchInput in;
    const json& vars = required(doc, "variables", "input");
    if (!vars.is_array() || vars.empty()) throw InputError("variables must be a non-empty array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars.size(); ++i) names.push_back(as_string(vars[i], "variables[" + std::to_string(i) + "]"));
    try {
        in.variables = VariableList(std::move(names));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("variables: ") + e.what());
    }

    const json& mat = required(doc, "matrix", "input");
    if (!mat.is_array() || mat.empty()) throw InputError("matrix must be a non-empty array of rows");
    for (std::size_t i = 0; i < mat.size(); ++i) {
        const std::string row_where = "matrix[" + std::to_string(i) + "]";
        if (!mat[i].is_array() || mat[i].empty()) throw InputError(row_where + " must be a non-empty array");
        std::vector<std::string> row;
        for (std::size_t j = 0; j < mat[i].size(); ++j)
            row.push_back(as_string(mat[i][j], row_where + "[" + std::to_string(j) + "]"));
        if (!in.matrix_text.empty() && row.size() != in.matrix_text.front().size())
            throw InputError("matrix rows have different lengths");
        in.matrix_text.push_back(std::move(row));
    }

    in.t = as_count(required(doc, "t", "input"), "t");

    const json& amb = required(doc, "ambient", "input");
    only_keys(amb, {"kind", "dim"}, "ambient");
    const std::string kind = as_string(required(amb, "kind", "ambient"), "ambient.kind");
    if (kind == "projective") in.ambient.kind = AmbientKind::projective;
    else if (kind == "affine") in.ambient.kind = AmbientKind::affine;
    else throw InputError("ambient.kind must be \"projective\" or \"affine\"");
    in.ambient.dim = as_count(required(amb, "dim", "ambient"), "ambient.dim");

    if (auto it = doc.find("weights"); it != doc.end()) {
        if (!it->is_array()) throw InputError("weights must be an array of integers");
        std::vector<long long> w;
        for (std::size_t i = 0; i < it->size(); ++i) w.push_back(as_int((*it)[i], "weights[" + std::to_string(i) + "]"));
        in.weights = std::move(w);
    }

    const json& sings = required(doc, "singularities", "input");
    if (!sings.is_array()) throw InputError("singularities must be an array");
    for (std::size_t i = 0; i < sings.size(); ++i) {
        const std::string where = "singularities[" + std::to_string(i) + "]";
        const json& s = sings[i];
        only_keys(s, {"point", "n", "p", "t", "d", "smoothable", "mu", "chi_smoothing", "chi_lower_stratum"}, where);
        SingularitySource src;
        src.point = as_point(required(s, "point", where), where + ".point");
        auto cnt = [&](const char* k) { return optional_field<std::size_t>(s, k, [&](const json& v) { return as_count(v, where + "." + k); }); };
        auto num = [&](const char* k) { return optional_field<long long>(s, k, [&](const json& v) { return as_int(v, where + "." + k); }); };
        src.n = cnt("n");
        src.p = cnt("p");
        src.t = cnt("t");
        if (auto d = num("d")) src.d = static_cast<int>(*d);
        src.smoothable = optional_field<bool>(s, "smoothable", [&](const json& v) {
            if (!v.is_boolean()) throw InputError(where + ".smoothable must be a boolean");
            return v.get<bool>();
        });
        src.mu = num("mu");
        if (src.mu && *src.mu < 0) throw InputError(where + ".mu must be non-negative");
        src.chi_smoothing = num("chi_smoothing");
        src.chi_lower_stratum = num("chi_lower_stratum");
        in.singularities.push_back(std::move(src));
    }

    if (auto it = doc.find("form"); it != doc.end()) {
        const std::string fk = as_string(required(*it, "kind", "form"), "form.kind");
        if (fk == "cstar") {
            only_keys(*it, {"kind"}, "form");
            in.form = FormKind::cstar;
        } else if (fk == "explicit") {
            only_keys(*it, {"kind", "coefficients"}, "form");
            in.form = FormKind::explicit_coefficients;
            const json& co = required(*it, "coefficients", "form");
            if (!co.is_array()) throw InputError("form.coefficients must be an array");
            for (std::size_t i = 0; i < co.size(); ++i)
                in.form_coefficients.push_back(as_string(co[i], "form.coefficients[" + std::to_string(i) + "]"));
        } else {
            throw InputError("form.kind must be \"cstar\" or \"explicit\"");
        }
    }

    if (auto it = doc.find("known"); it != doc.end()) {
        only_keys(*it, {"chi_X", "indices"}, "known");
        in.chi_x = optional_field<long long>(*it, "chi_X", [](const json& v) { return as_int(v, "known.chi_X"); });
        if (auto idx = it->find("indices"); idx != it->end()) {
            if (!idx->is_object()) throw InputError("known.indices must be an object");
            for (const auto& [key, value] : idx->items()) {
                Point pt = as_point(json(key), "known.indices key");
                for (const auto& [p, v] : in.known_indices)
                    if (p == pt) throw InputError("known.indices lists " + pt.to_string() + " twice");
                in.known_indices.emplace_back(pt, as_int(value, "known.indices[" + key + "]"));
            }
        }
    }
    return in;
}

inline WorkbenchInput load_input(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_input(doc);
}

/// Parses one polynomial field, prefixing errors with its location.
inline Polynomial parse_field(const std::string& text, const VariableList& vars, const std::string& where) {
    try {
        return parse_polynomial(text, vars);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                         e.position());
    }
}

inline DeterminantalModel build_model(const WorkbenchInput& in) {
    std::vector<std::vector<Polynomial>> grid;
    for (std::size_t i = 0; i < in.matrix_text.size(); ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < in.matrix_text[i].size(); ++j)
            row.push_back(parse_field(in.matrix_text[i][j], in.variables,
                                      "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        grid.push_back(std::move(row));
    }
    try {
        return DeterminantalModel(PolyMatrix(in.variables, std::move(grid)), in.t, in.ambient);
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

}  // namespace phdet::cli
