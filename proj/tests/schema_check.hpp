#ifndef WPH_TESTS_SCHEMA_CHECK_HPP
#define WPH_TESTS_SCHEMA_CHECK_HPP

// Minimal JSON-schema checker covering the subset the shipped schema uses:
// type, enum, required, properties, additionalProperties, items, oneOf,
// $ref into #/definitions, and pattern.

#include <regex>
#include <string>

#include <json.hpp>

namespace schema_check {

using Json = nlohmann::json;

inline const Json& resolve_ref(const Json& root, const std::string& ref) {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
    return root.at("definitions").at(ref.substr(prefix.size()));
}

inline bool validate(const Json& root, const Json& schema, const Json& value,
                     std::string* error = nullptr) {
    auto fail = [&](const std::string& why) {
        if (error) *error = why + " at value " + value.dump().substr(0, 80);
        return false;
    };

    if (schema.contains("$ref"))
        return validate(root, resolve_ref(root, schema.at("$ref").get<std::string>()), value,
                        error);

    if (schema.contains("oneOf")) {
        int matches = 0;
        for (const auto& sub : schema.at("oneOf"))
            if (validate(root, sub, value)) ++matches;
        if (matches != 1) return fail("oneOf matched " + std::to_string(matches) + " branches");
        return true;
    }

    if (schema.contains("enum")) {
        for (const auto& allowed : schema.at("enum"))
            if (allowed == value) return true;
        return fail("value not in enum");
    }

    if (schema.contains("type")) {
        const std::string type = schema.at("type").get<std::string>();
        if (type == "object" && !value.is_object()) return fail("expected object");
        if (type == "array" && !value.is_array()) return fail("expected array");
        if (type == "string" && !value.is_string()) return fail("expected string");
        if (type == "boolean" && !value.is_boolean()) return fail("expected boolean");
        if (type == "integer" && !value.is_number_integer() && !value.is_number_unsigned())
            return fail("expected integer");
        if (type == "number" && !value.is_number()) return fail("expected number");
    }

    if (schema.contains("pattern") && value.is_string()) {
        const std::regex re(schema.at("pattern").get<std::string>());
        if (!std::regex_match(value.get<std::string>(), re)) return fail("pattern mismatch");
    }

    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return fail("missing required key " + key.get<std::string>());
        const bool closed = schema.contains("additionalProperties") &&
                            schema.at("additionalProperties").is_boolean() &&
                            !schema.at("additionalProperties").get<bool>();
        for (const auto& [key, sub] : value.items()) {
            if (schema.contains("properties") && schema.at("properties").contains(key)) {
                if (!validate(root, schema.at("properties").at(key), sub, error)) return false;
            } else if (closed) {
                return fail("unexpected key " + key);
            }
        }
    }

    if (value.is_array() && schema.contains("items")) {
        for (const auto& item : value)
            if (!validate(root, schema.at("items"), item, error)) return false;
    }

    return true;
}

inline bool validate_document(const Json& schema, const Json& value,
                              std::string* error = nullptr) {
    return validate(schema, schema, value, error);
}

}  // namespace schema_check

#endif
