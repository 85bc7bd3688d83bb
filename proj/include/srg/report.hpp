#pragma once

// JSON renderings of classification results and a validator for the subset
// of JSON Schema the shipped schemas use (type, required, properties,
// additionalProperties, items, minItems, maxItems, minimum, enum, oneOf).
// Requires nlohmann/json.

#include "classify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace srg {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json bracket_json(std::size_t lo, std::size_t hi)
{
    if (lo == hi)
        return lo;
    return Json::array({lo, hi});
}

} // namespace detail

inline Json to_json(const CatalogEntry & e)
{
    Json j;
    j["id"] = e.id;
    j["n"] = e.params.n;
    j["k"] = e.params.k;
    j["lambda"] = e.params.lambda;
    j["mu"] = e.params.mu;
    j["omega"] = detail::bracket_json(e.type.omega_lo, e.type.omega_hi);
    j["chi"] = detail::bracket_json(e.type.chi_lo, e.type.chi_hi);
    j["bound"] = e.type.bound.to_string();
    j["type"] = std::string(to_string(e.type.tag));
    if (e.type.tag == TypeTag::Undetermined) {
        Json c = Json::array();
        for (auto t : e.type.candidates)
            c.push_back(std::string(to_string(t)));
        j["candidates"] = c;
    }
    j["core"] = e.flags.core ? Json(*e.flags.core) : Json(nullptr);
    return j;
}

inline Json to_json(const BatchResult & r)
{
    Json j;
    Json entries = Json::array();
    for (const auto & e : r.entries)
        entries.push_back(to_json(e));
    j["entries"] = entries;
    Json summary = Json::object();
    for (auto tag : {TypeTag::A, TypeTag::B, TypeTag::C, TypeTag::X, TypeTag::Undetermined})
        summary[std::string(to_string(tag))] = r.count(tag);
    j["summary"] = summary;
    Json skipped = Json::array();
    for (const auto & s : r.skipped)
        skipped.push_back({{"line", s.line_number}, {"reason", s.reason}});
    j["skipped"] = skipped;
    return j;
}

/// Validates `value` against `schema`; returns one message per violation,
/// each prefixed with the JSON pointer of the offending value.
inline std::vector<std::string> validate_json(const Json & value, const Json & schema, const std::string & path = "")
{
    std::vector<std::string> errors;
    auto where = [&]() { return path.empty() ? std::string("/") : path; };

    if (schema.contains("oneOf")) {
        std::size_t matches = 0;
        for (const auto & option : schema["oneOf"])
            if (validate_json(value, option, path).empty())
                ++matches;
        if (matches != 1)
            errors.push_back(where() + ": matches " + std::to_string(matches) + " oneOf branches");
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto & option : schema["enum"])
            found = found || option == value;
        if (!found)
            errors.push_back(where() + ": value not in enum");
    }
    if (schema.contains("type")) {
        std::string type = schema["type"];
        bool ok = (type == "object" && value.is_object()) || (type == "array" && value.is_array())
            || (type == "string" && value.is_string()) || (type == "integer" && value.is_number_integer())
            || (type == "number" && value.is_number()) || (type == "boolean" && value.is_boolean())
            || (type == "null" && value.is_null());
        if (!ok) {
            errors.push_back(where() + ": expected " + type);
            return errors;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto & key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(where() + ": missing " + key.get<std::string>());
        const Json * properties = schema.contains("properties") ? &schema["properties"] : nullptr;
        bool closed = schema.contains("additionalProperties") && schema["additionalProperties"] == false;
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (properties && properties->contains(it.key())) {
                auto sub = validate_json(it.value(), (*properties)[it.key()], path + "/" + it.key());
                errors.insert(errors.end(), sub.begin(), sub.end());
            }
            else if (closed) {
                errors.push_back(where() + ": unexpected " + it.key());
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
            errors.push_back(where() + ": too few items");
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
            errors.push_back(where() + ": too many items");
        if (schema.contains("items"))
            for (std::size_t i = 0; i < value.size(); ++i) {
                auto sub = validate_json(value[i], schema["items"], path + "/" + std::to_string(i));
                errors.insert(errors.end(), sub.begin(), sub.end());
            }
    }
    if (value.is_number() && schema.contains("minimum") && value.get<double>() < schema["minimum"].get<double>())
        errors.push_back(where() + ": below minimum");
    return errors;
}

} // namespace srg
