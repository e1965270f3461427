#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "flatspec/analysis.hpp"
#include "flatspec/constructions.hpp"
#include "flatspec/flat.hpp"
#include "flatspec/point_set.hpp"
#include "flatspec/version.hpp"

namespace flatspec {

using Json = nlohmann::json;

// {"n": <int>, "points": [<ints ascending>]}
inline Json to_json(const PointSet& s) {
    Json j;
    j["n"] = s.dim();
    j["points"] = s.points();
    return j;
}

inline PointSet point_set_from_json(const Json& j) {
    // reports produced by the construct command carry the set under "set"
    if (j.is_object() && !j.contains("points") && j.contains("set"))
        return point_set_from_json(j.at("set"));
    if (!j.is_object() || !j.contains("n") || !j.contains("points"))
        throw std::invalid_argument("point set: expected {\"n\": ..., \"points\": [...]}");
    const int n = j.at("n").get<int>();
    PointSet s(n);
    for (const auto& e : j.at("points")) {
        if (!e.is_number_integer())
            throw std::invalid_argument("point set: points must be integers");
        const std::int64_t v = e.get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(s.universe_size()))
            throw std::invalid_argument("point set: point " + std::to_string(v) + " out of range");
        if (s.contains(static_cast<Point>(v)))
            throw std::invalid_argument("point set: duplicate point " + std::to_string(v));
        s.insert(static_cast<Point>(v));
    }
    return s;
}

inline PointSet load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return point_set_from_json(j);
}

inline Json to_json(const Flat& f) {
    Json j;
    j["n"] = f.ambient_dim();
    j["dim"] = f.dim();
    j["basis"] = std::vector<Point>(f.basis().begin(), f.basis().end());
    j["offset"] = f.offset();
    return j;
}

inline Json to_json(const Spectrum& sp) {
    Json j;
    j["n"] = sp.n;
    j["k"] = sp.k;
    j["t"] = sp.t;
    j["members"] = sp.members;
    j["density"] = sp.density;
    j["method"] = sp.method;
    return j;
}

inline Json report_envelope(const std::string& command, const Json& params) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = command;
    j["params"] = params;
    return j;
}

// CSV uses a plain key,value layout; list-valued rows are space-separated.
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

inline void write_output(const std::string& text, const std::optional<std::string>& path,
                         std::ostream& fallback) {
    if (path) {
        std::ofstream out(*path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + *path);
        out << text;
    } else {
        fallback << text;
    }
}

} // namespace flatspec
