// Copyright 2026 The ermodel Authors
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

#include "ermodel/model_json.hpp"

#include <json.hpp>

#include "json_detail.hpp"

namespace ermodel {

using nlohmann::ordered_json;

namespace detail {

SourceSpan span_at_offset(std::string_view text, std::size_t offset) {
    SourceSpan span{1, 1, 0};
    const std::size_t stop = offset > text.size() ? text.size() : offset;
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
            ++span.line;
            span.column = 1;
        } else {
            ++span.column;
        }
    }
    return span;
}

ParseError json_syntax_error(std::string_view text, const nlohmann::json::parse_error& err) {
    // exception byte positions are 1-based
    const std::size_t offset = err.byte > 0 ? err.byte - 1 : 0;
    return ParseError{span_at_offset(text, offset), "well-formed JSON", err.what()};
}

ordered_json minmax_to_json(const MinMaxPair& pair) {
    ordered_json j;
    j["min"] = pair.min;
    if (pair.max.has_value()) {
        j["max"] = *pair.max;
    } else {
        j["max"] = "N";
    }
    return j;
}

MinMaxPair minmax_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("min") || !j.contains("max")) {
        throw DecodeFailure{where, "an object with \"min\" and \"max\""};
    }
    if (!j["min"].is_number_unsigned()) {
        throw DecodeFailure{where + ".min", "a non-negative integer"};
    }
    MinMaxPair pair;
    pair.min = j["min"].get<std::uint32_t>();
    const auto& max = j["max"];
    if (max.is_string() && max.get<std::string>() == "N") {
        pair.max = std::nullopt;
    } else if (max.is_number_unsigned()) {
        pair.max = max.get<std::uint32_t>();
    } else {
        throw DecodeFailure{where + ".max", "a non-negative integer or \"N\""};
    }
    return pair;
}

std::string require_string(const ordered_json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw DecodeFailure{where + "." + field, "a string"};
    }
    return j[field].get<std::string>();
}

std::vector<std::string> require_string_array(const ordered_json& j, const char* field,
                                              const std::string& where) {
    if (!j.contains(field) || !j[field].is_array()) {
        throw DecodeFailure{where + "." + field, "an array of strings"};
    }
    std::vector<std::string> out;
    for (const auto& item : j[field]) {
        if (!item.is_string()) {
            throw DecodeFailure{where + "." + field, "an array of strings"};
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace detail

std::string model_to_json(const ERModel& model) {
    ordered_json doc;
    doc["entities"] = ordered_json::array();
    for (const auto& entity : model.entities) {
        ordered_json j;
        j["name"] = entity.name;
        j["key"] = entity.key_attr;
        j["mandatory"] = entity.mandatory_attr;
        j["secondary"] = entity.secondary_attrs;
        doc["entities"].push_back(std::move(j));
    }
    doc["relationships"] = ordered_json::array();
    for (const auto& rel : model.relationships) {
        ordered_json j;
        j["name"] = rel.name;
        j["left"] = rel.left_entity;
        j["right"] = rel.right_entity;
        j["left_minmax"] = detail::minmax_to_json(rel.left_constraint);
        j["right_minmax"] = detail::minmax_to_json(rel.right_constraint);
        j["attrs"] = rel.attrs;
        doc["relationships"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

Parsed<ERModel> model_from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        return detail::json_syntax_error(text, err);
    }

    try {
        if (!doc.is_object() || !doc.contains("entities") || !doc["entities"].is_array() ||
            !doc.contains("relationships") || !doc["relationships"].is_array()) {
            throw detail::DecodeFailure{"document",
                                        "an object with \"entities\" and \"relationships\" arrays"};
        }
        ERModel model;
        for (const auto& j : doc["entities"]) {
            EntityType entity;
            entity.name = detail::require_string(j, "name", "entity");
            entity.key_attr = detail::require_string(j, "key", "entity");
            entity.mandatory_attr = detail::require_string(j, "mandatory", "entity");
            entity.secondary_attrs = detail::require_string_array(j, "secondary", "entity");
            model.entities.push_back(std::move(entity));
        }
        for (const auto& j : doc["relationships"]) {
            RelationshipType rel;
            rel.name = detail::require_string(j, "name", "relationship");
            rel.left_entity = detail::require_string(j, "left", "relationship");
            rel.right_entity = detail::require_string(j, "right", "relationship");
            if (!j.contains("left_minmax") || !j.contains("right_minmax")) {
                throw detail::DecodeFailure{"relationship",
                                            "objects \"left_minmax\" and \"right_minmax\""};
            }
            rel.left_constraint = detail::minmax_from_json(j["left_minmax"], "left_minmax");
            rel.right_constraint = detail::minmax_from_json(j["right_minmax"], "right_minmax");
            rel.attrs = detail::require_string_array(j, "attrs", "relationship");
            model.relationships.push_back(std::move(rel));
        }
        return model;
    } catch (const detail::DecodeFailure& failure) {
        return failure.to_error();
    }
}

}  // namespace ermodel
