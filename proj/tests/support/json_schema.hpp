// Copyright 2026 The AerialSynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace aerialsynth::testing {

// Validator for the JSON Schema keywords our documented schemas use:
// type, required, properties, additionalProperties (false), items,
// minItems, maxItems, minimum, enum. Returns one message per violation.
class SchemaValidator {
 public:
  std::vector<std::string> validate(const nlohmann::json& schema, const nlohmann::json& doc) {
    errors_.clear();
    check(schema, doc, "$");
    return errors_;
  }

 private:
  static bool has_type(const nlohmann::json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "null") return v.is_null();
    return false;
  }

  void fail(const std::string& where, const std::string& what) {
    errors_.push_back(where + ": " + what);
  }

  void check(const nlohmann::json& s, const nlohmann::json& v, const std::string& where) {
    if (s.contains("type") && !has_type(v, s["type"].get<std::string>())) {
      fail(where, "expected " + s["type"].get<std::string>());
      return;
    }
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) fail(where, "value not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
      fail(where, "below minimum");
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& key : s["required"]) {
          if (!v.contains(key.get<std::string>())) fail(where, "missing " + key.get<std::string>());
        }
      }
      const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
      for (const auto& [key, value] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(key)) {
          check(s["properties"][key], value, where + "." + key);
        } else if (closed) {
          fail(where, "unexpected key " + key);
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) {
        fail(where, "too few items");
      }
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) {
        fail(where, "too many items");
      }
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          check(s["items"], v[i], where + "[" + std::to_string(i) + "]");
        }
      }
    }
  }

  std::vector<std::string> errors_;
};

}  // namespace aerialsynth::testing
