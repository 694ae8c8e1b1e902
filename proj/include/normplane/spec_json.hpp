#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "normplane/errors.hpp"
#include "normplane/norm_spec.hpp"

namespace normplane {

// JSON schema:
//   {"family":"lp","p":2}
//   {"family":"linf"}
//   {"family":"lplq","p":2,"q":1}     p may be the string "inf"
//   {"family":"polygon","vertices":[[x,y],...]}
// Aliases: euclidean, l1, l2, linf, l2-l1, linf-l1.

inline nlohmann::ordered_json spec_to_json(const NormSpec& spec) {
    nlohmann::ordered_json j;
    switch (spec.family) {
        case NormFamily::Lp:
            j["family"] = "lp";
            j["p"] = spec.p;
            break;
        case NormFamily::Linf:
            j["family"] = "linf";
            break;
        case NormFamily::LpLq:
            j["family"] = "lplq";
            if (std::isinf(spec.p)) {
                j["p"] = "inf";
            } else {
                j["p"] = spec.p;
            }
            j["q"] = spec.q;
            break;
        case NormFamily::Polygon: {
            j["family"] = "polygon";
            auto arr = nlohmann::ordered_json::array();
            for (const Vector2& v : spec.vertices) arr.push_back({v.u, v.v});
            j["vertices"] = arr;
            break;
        }
    }
    return j;
}

inline double parse_exponent(const nlohmann::json& field, const char* name) {
    if (field.is_string()) {
        const std::string s = field.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "infinity" || s == "Infinity") {
            return std::numeric_limits<double>::infinity();
        }
        throw ConfigError(std::string("norm spec: unrecognized ") + name + " value '" + s + "'");
    }
    if (!field.is_number()) {
        throw ConfigError(std::string("norm spec: ") + name + " must be a number or \"inf\"");
    }
    return field.get<double>();
}

inline NormSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family")) {
        throw ConfigError("norm spec: expected an object with a \"family\" field");
    }
    const std::string family = j.at("family").get<std::string>();
    if (family == "lp") {
        if (!j.contains("p")) throw ConfigError("norm spec: lp requires \"p\"");
        return NormSpec::lp(parse_exponent(j.at("p"), "p"));
    }
    if (family == "linf") return NormSpec::linf();
    if (family == "lplq") {
        if (!j.contains("p") || !j.contains("q")) throw ConfigError("norm spec: lplq requires \"p\" and \"q\"");
        return NormSpec::lplq(parse_exponent(j.at("p"), "p"), parse_exponent(j.at("q"), "q"));
    }
    if (family == "polygon") {
        if (!j.contains("vertices") || !j.at("vertices").is_array()) {
            throw ConfigError("norm spec: polygon requires a \"vertices\" array");
        }
        std::vector<Vector2> vs;
        for (const auto& entry : j.at("vertices")) {
            if (!entry.is_array() || entry.size() != 2) {
                throw ConfigError("norm spec: polygon vertices must be [x, y] pairs");
            }
            vs.push_back({entry.at(0).get<double>(), entry.at(1).get<double>()});
        }
        return NormSpec::polygon(std::move(vs));
    }
    throw ConfigError("norm spec: unknown family '" + family + "'");
}

inline std::optional<NormSpec> spec_from_alias(const std::string& name) {
    if (name == "euclidean" || name == "l2") return NormSpec::euclidean();
    if (name == "l1") return NormSpec::lp(1.0);
    if (name == "linf") return NormSpec::linf();
    if (name == "l2-l1") return NormSpec::lplq(2.0, 1.0);
    if (name == "linf-l1") return NormSpec::lplq(std::numeric_limits<double>::infinity(), 1.0);
    return std::nullopt;
}

// Accepts an alias, inline JSON (leading '{'), or a path to a JSON file.
inline NormSpec parse_space_source(const std::string& source) {
    if (auto alias = spec_from_alias(source)) return *alias;
    std::string text = source;
    if (!source.empty() && source.front() != '{') {
        std::ifstream in(source);
        if (!in) throw ConfigError("space: '" + source + "' is neither an alias, inline JSON, nor a readable file");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("space: invalid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

}  // namespace normplane
