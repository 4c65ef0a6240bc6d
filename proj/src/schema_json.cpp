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

#include "ermodel/schema_json.hpp"

#include <json.hpp>

#include "json_detail.hpp"

namespace ermodel {

using nlohmann::ordered_json;

namespace {

ordered_json column_to_json(const Column& column) {
    ordered_json j;
    j["name"] = column.name;
    j["not_null"] = column.not_null;
    return j;
}

Column column_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string() ||
        !j.contains("not_null") || !j["not_null"].is_boolean()) {
        throw detail::DecodeFailure{where, "a column object with \"name\" and \"not_null\""};
    }
    return Column{j["name"].get<std::string>(), j["not_null"].get<bool>()};
}

std::vector<Column> columns_from_json(const ordered_json& j, const std::string& where) {
    if (!j.contains("columns") || !j["columns"].is_array()) {
        throw detail::DecodeFailure{where + ".columns", "an array of columns"};
    }
    std::vector<Column> out;
    for (const auto& item : j["columns"]) out.push_back(column_from_json(item, where + ".columns"));
    return out;
}

bool require_bool(const ordered_json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j[field].is_boolean()) {
        throw detail::DecodeFailure{where + "." + field, "a boolean"};
    }
    return j[field].get<bool>();
}

struct UnitToJson {
    ordered_json operator()(const BaseRelation& u) const {
        ordered_json j;
        j["kind"] = "base_relation";
        j["relation"] = u.relation;
        j["pk_column"] = column_to_json(u.pk_column);
        j["mandatory_column"] = column_to_json(u.mandatory_column);
        return j;
    }
    ordered_json operator()(const SecondaryColumns& u) const {
        ordered_json j;
        j["kind"] = "secondary_columns";
        j["relation"] = u.relation;
        j["columns"] = ordered_json::array();
        for (const auto& column : u.columns) j["columns"].push_back(column_to_json(column));
        return j;
    }
    ordered_json operator()(const RelationshipRelation& u) const {
        ordered_json j;
        j["kind"] = "relationship_relation";
        j["relation"] = u.relation;
        j["left_fk"] = column_to_json(u.left_fk);
        j["right_fk"] = column_to_json(u.right_fk);
        j["left_target"] = u.left_target;
        j["right_target"] = u.right_target;
        j["left_annotation"] = detail::minmax_to_json(u.left_annotation);
        j["right_annotation"] = detail::minmax_to_json(u.right_annotation);
        j["unique_left_fk"] = u.unique_left_fk;
        j["unique_right_fk"] = u.unique_right_fk;
        return j;
    }
    ordered_json operator()(const RelationshipAttrColumns& u) const {
        ordered_json j;
        j["kind"] = "relationship_attr_columns";
        j["relation"] = u.relation;
        j["columns"] = ordered_json::array();
        for (const auto& column : u.columns) j["columns"].push_back(column_to_json(column));
        return j;
    }
};

RdsUnit unit_from_json(const ordered_json& j) {
    const std::string kind = detail::require_string(j, "kind", "unit");
    const std::string relation = detail::require_string(j, "relation", "unit");
    if (kind == "base_relation") {
        if (!j.contains("pk_column") || !j.contains("mandatory_column")) {
            throw detail::DecodeFailure{"unit " + relation,
                                        "\"pk_column\" and \"mandatory_column\""};
        }
        return BaseRelation{relation, column_from_json(j["pk_column"], relation + ".pk_column"),
                            column_from_json(j["mandatory_column"], relation + ".mandatory_column")};
    }
    if (kind == "secondary_columns") {
        return SecondaryColumns{relation, columns_from_json(j, relation)};
    }
    if (kind == "relationship_relation") {
        RelationshipRelation unit;
        unit.relation = relation;
        if (!j.contains("left_fk") || !j.contains("right_fk")) {
            throw detail::DecodeFailure{"unit " + relation, "\"left_fk\" and \"right_fk\""};
        }
        unit.left_fk = column_from_json(j["left_fk"], relation + ".left_fk");
        unit.right_fk = column_from_json(j["right_fk"], relation + ".right_fk");
        unit.left_target = detail::require_string(j, "left_target", relation);
        unit.right_target = detail::require_string(j, "right_target", relation);
        if (!j.contains("left_annotation") || !j.contains("right_annotation")) {
            throw detail::DecodeFailure{"unit " + relation,
                                        "\"left_annotation\" and \"right_annotation\""};
        }
        unit.left_annotation = detail::minmax_from_json(j["left_annotation"],
                                                        relation + ".left_annotation");
        unit.right_annotation = detail::minmax_from_json(j["right_annotation"],
                                                         relation + ".right_annotation");
        unit.unique_left_fk = require_bool(j, "unique_left_fk", relation);
        unit.unique_right_fk = require_bool(j, "unique_right_fk", relation);
        return unit;
    }
    if (kind == "relationship_attr_columns") {
        return RelationshipAttrColumns{relation, columns_from_json(j, relation)};
    }
    throw detail::DecodeFailure{"unit " + relation, "a known unit kind, got \"" + kind + "\""};
}

RdsUnitKind kind_from_name(const std::string& name) {
    if (name == "base_relation") return RdsUnitKind::BaseRelation;
    if (name == "secondary_columns") return RdsUnitKind::SecondaryColumns;
    if (name == "relationship_relation") return RdsUnitKind::RelationshipRelation;
    if (name == "relationship_attr_columns") return RdsUnitKind::RelationshipAttrColumns;
    throw detail::DecodeFailure{"mapping target", "a known unit kind, got \"" + name + "\""};
}

}  // namespace

std::string schema_to_json(const RelationalSchema& schema, const UnitMapping& mapping) {
    ordered_json doc;
    doc["units"] = ordered_json::array();
    for (const auto& unit : schema.units) {
        doc["units"].push_back(std::visit(UnitToJson{}, unit));
    }
    doc["mapping"] = ordered_json::array();
    for (const auto& [source, target] : mapping.pairs) {
        ordered_json pair;
        pair["source"] = source;
        pair["target"]["kind"] = std::string(to_string(target.kind));
        pair["target"]["relation"] = target.relation;
        doc["mapping"].push_back(std::move(pair));
    }
    return doc.dump(2) + "\n";
}

Parsed<SchemaDocument> schema_from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        return detail::json_syntax_error(text, err);
    }

    try {
        if (!doc.is_object() || !doc.contains("units") || !doc["units"].is_array() ||
            !doc.contains("mapping") || !doc["mapping"].is_array()) {
            throw detail::DecodeFailure{"document",
                                        "an object with \"units\" and \"mapping\" arrays"};
        }
        SchemaDocument out;
        bool has_base = false;
        for (const auto& j : doc["units"]) {
            RdsUnit unit = unit_from_json(j);
            has_base = has_base || std::holds_alternative<BaseRelation>(unit);
            out.schema.units.push_back(std::move(unit));
        }
        if (!has_base) {
            throw detail::DecodeFailure{"units", "at least one base relation"};
        }
        for (const auto& j : doc["mapping"]) {
            if (!j.is_object() || !j.contains("target") || !j["target"].is_object()) {
                throw detail::DecodeFailure{"mapping", "pairs with \"source\" and \"target\""};
            }
            const std::string source = detail::require_string(j, "source", "mapping");
            RdsUnitRef target;
            target.kind = kind_from_name(detail::require_string(j["target"], "kind", "target"));
            target.relation = detail::require_string(j["target"], "relation", "target");
            out.mapping.pairs.emplace_back(source, std::move(target));
        }
        return out;
    } catch (const detail::DecodeFailure& failure) {
        return failure.to_error();
    }
}

}  // namespace ermodel
