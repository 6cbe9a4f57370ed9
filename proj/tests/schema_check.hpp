#pragma once

// Test-only structural validator for the subset of JSON Schema the shipped
// schema file uses: type, const, enum, pattern, properties, required,
// additionalProperties, patternProperties, items, oneOf.

#include <json.hpp>

#include <regex>
#include <string>

namespace testutil {

using nlohmann::json;

inline bool validate(const json& schema, const json& value);

inline bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "number") return value.is_number();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate(const json& schema, const json& value) {
  if (schema.contains("oneOf")) {
    int matched = 0;
    for (const auto& branch : schema["oneOf"])
      if (validate(branch, value)) ++matched;
    if (matched != 1) return false;
  }
  if (schema.contains("const") && schema["const"] != value) return false;
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& candidate : schema["enum"])
      if (candidate == value) found = true;
    if (!found) return false;
  }
  if (schema.contains("type") &&
      !type_matches(schema["type"].get<std::string>(), value))
    return false;
  if (schema.contains("pattern")) {
    if (!value.is_string()) return false;
    if (!std::regex_search(value.get<std::string>(),
                           std::regex(schema["pattern"].get<std::string>())))
      return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) return false;
    for (const auto& [key, child] : value.items()) {
      bool covered = false;
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        if (!validate(schema["properties"][key], child)) return false;
        covered = true;
      }
      if (!covered && schema.contains("patternProperties")) {
        for (const auto& [pattern, sub] : schema["patternProperties"].items()) {
          if (std::regex_search(key, std::regex(pattern))) {
            if (!validate(sub, child)) return false;
            covered = true;
          }
        }
      }
      if (!covered && schema.contains("additionalProperties") &&
          schema["additionalProperties"].is_boolean() &&
          !schema["additionalProperties"].get<bool>())
        return false;
    }
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto& child : value)
      if (!validate(schema["items"], child)) return false;
  return true;
}

}  // namespace testutil
