#include "heispoly/json_io.hpp"

#include <stdexcept>

namespace heispoly {

namespace {

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("json: missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<Rat> rat_vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: expected an array of rationals");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(rat_from_json(item));
    return out;
}

json rat_vector_to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const Rat& r : v) out.push_back(rat_to_json(r));
    return out;
}

}  // namespace

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("json: rational must be a \"p/q\" string");
    return Rat::parse(j.get<std::string>());
}

json poly_to_json(const Poly& p) {
    return json{{"bound", p.bound()}, {"coeffs", rat_vector_to_json(p.coeffs())}};
}

Poly poly_from_json(const json& j) {
    std::vector<Rat> coeffs = rat_vector_from_json(expect(j, "coeffs"));
    if (coeffs.empty()) throw std::invalid_argument("json: polynomial needs coefficients");
    const int bound = j.contains("bound") ? j.at("bound").get<int>()
                                          : static_cast<int>(coeffs.size()) - 1;
    return Poly(bound, std::move(coeffs));
}

json matrix_to_json(const TriMatrix& m) {
    json rows = json::array();
    for (int i = 0; i <= m.bound(); ++i) {
        json row = json::array();
        for (int k = 0; k <= m.bound(); ++k) row.push_back(rat_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return json{{"bound", m.bound()}, {"rows", std::move(rows)}};
}

TriMatrix matrix_from_json(const json& j) {
    const json& rows = expect(j, "rows");
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("json: matrix needs rows");
    const int bound = j.contains("bound") ? j.at("bound").get<int>()
                                          : static_cast<int>(rows.size()) - 1;
    TriMatrix m(bound);
    if (rows.size() != static_cast<std::size_t>(bound) + 1)
        throw std::invalid_argument("json: matrix row count must be bound+1");
    for (int i = 0; i <= bound; ++i) {
        const json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || row.size() != static_cast<std::size_t>(bound) + 1)
            throw std::invalid_argument("json: matrix row length must be bound+1");
        for (int k = 0; k <= bound; ++k)
            m.at(i, k) = rat_from_json(row.at(static_cast<std::size_t>(k)));
    }
    return m;
}

json group_element_to_json(const GroupElement& g, bool with_bound) {
    json out = json::object();
    if (with_bound) out["bound"] = g.bound();
    out["u"] = rat_to_json(g.u);
    out["coeffs"] = rat_vector_to_json(g.poly.coeffs());
    return out;
}

GroupElement group_element_from_json(const json& j) {
    Rat u = rat_from_json(expect(j, "u"));
    std::vector<Rat> coeffs = rat_vector_from_json(expect(j, "coeffs"));
    if (coeffs.empty()) throw std::invalid_argument("json: group element needs coefficients");
    const int bound = j.contains("bound") ? j.at("bound").get<int>()
                                          : static_cast<int>(coeffs.size()) - 1;
    return GroupElement(std::move(u), Poly(bound, std::move(coeffs)));
}

json step_function_to_json(const StepFunction& f) {
    return json{{"breaks", rat_vector_to_json(f.breaks())},
                {"values", rat_vector_to_json(f.values())}};
}

StepFunction step_function_from_json(const json& j) {
    return StepFunction(rat_vector_from_json(expect(j, "breaks")),
                        rat_vector_from_json(expect(j, "values")));
}

json current_element_to_json(const CurrentElement& e) {
    json fs = json::array();
    for (const StepFunction& f : e.fs) fs.push_back(step_function_to_json(f));
    return json{{"bound", e.bound},
                {"central", rat_to_json(e.central)},
                {"g", step_function_to_json(e.g)},
                {"fs", std::move(fs)}};
}

CurrentElement current_element_from_json(const json& j) {
    const int bound = expect(j, "bound").get<int>();
    Rat central = rat_from_json(expect(j, "central"));
    StepFunction g = step_function_from_json(expect(j, "g"));
    const json& fs_json = expect(j, "fs");
    if (!fs_json.is_array()) throw std::invalid_argument("json: fs must be an array");
    std::vector<StepFunction> fs;
    fs.reserve(fs_json.size());
    for (const auto& item : fs_json) fs.push_back(step_function_from_json(item));
    return CurrentElement(bound, std::move(central), std::move(g), std::move(fs));
}

json complex_to_json(CF64 z) { return json::array({z.real(), z.imag()}); }

CF64 complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("json: complex value must be [re, im]");
    return CF64(j.at(0).get<double>(), j.at(1).get<double>());
}

}  // namespace heispoly
