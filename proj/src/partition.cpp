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

#include "ermodel/partition.hpp"

#include <map>
#include <stdexcept>

#include <json.hpp>

#include "json_detail.hpp"

namespace ermodel {

using nlohmann::ordered_json;

std::string unit_label(const ERConstructUnit& unit) {
    struct Labeler {
        std::string operator()(const RegularEntityBase& u) const { return "b(" + u.entity + ")"; }
        std::string operator()(const SecondarySimpleAttrs& u) const { return "c(" + u.entity + ")"; }
        std::string operator()(const BinaryRelationshipBase& u) const {
            return "b(" + u.relationship + "(" + u.left + "," + u.right + "))";
        }
        std::string operator()(const OptionalRelationshipAttrs& u) const {
            return "p(" + u.relationship + "(" + u.left + "," + u.right + "))";
        }
    };
    return std::visit(Labeler{}, unit);
}

Partition partition_model(const ERModel& model) {
    const auto violations = validate_model(model);
    if (!violations.empty()) {
        std::string message = "partition_model requires a valid model:";
        for (const auto& v : violations) {
            message += " [" + std::string(to_string(v.code)) + "] " + v.message + ";";
        }
        throw std::invalid_argument(message);
    }

    Partition partition;
    partition.source_model = canonicalize(model);

    for (const auto& entity : partition.source_model.entities) {
        partition.units.push_back(
            RegularEntityBase{entity.name, entity.key_attr, entity.mandatory_attr});
        if (!entity.secondary_attrs.empty()) {
            partition.units.push_back(SecondarySimpleAttrs{entity.name, entity.secondary_attrs});
        }
    }
    for (const auto& rel : partition.source_model.relationships) {
        partition.units.push_back(BinaryRelationshipBase{
            rel.name, rel.left_entity, rel.right_entity, rel.left_constraint, rel.right_constraint});
        if (!rel.attrs.empty()) {
            partition.units.push_back(
                OptionalRelationshipAttrs{rel.name, rel.left_entity, rel.right_entity, rel.attrs});
        }
    }
    return partition;
}

std::string Construct::label() const {
    switch (kind) {
        case ConstructKind::Entity: return "entity " + name;
        case ConstructKind::EntityAttribute: return "attribute " + owner + "." + name;
        case ConstructKind::Relationship: return "relationship " + name;
        case ConstructKind::RelationshipAttribute: return "attribute " + owner + "." + name;
        case ConstructKind::MinMaxSide: return "minmax " + owner + "." + name;
    }
    return name;
}

std::vector<Construct> model_constructs(const ERModel& model) {
    std::vector<Construct> out;
    for (const auto& entity : model.entities) {
        out.push_back({ConstructKind::Entity, "", entity.name});
        out.push_back({ConstructKind::EntityAttribute, entity.name, entity.key_attr});
        out.push_back({ConstructKind::EntityAttribute, entity.name, entity.mandatory_attr});
        for (const auto& attr : entity.secondary_attrs) {
            out.push_back({ConstructKind::EntityAttribute, entity.name, attr});
        }
    }
    for (const auto& rel : model.relationships) {
        out.push_back({ConstructKind::Relationship, "", rel.name});
        out.push_back({ConstructKind::MinMaxSide, rel.name, "left"});
        out.push_back({ConstructKind::MinMaxSide, rel.name, "right"});
        for (const auto& attr : rel.attrs) {
            out.push_back({ConstructKind::RelationshipAttribute, rel.name, attr});
        }
    }
    return out;
}

std::vector<Construct> claimed_constructs(const ERConstructUnit& unit) {
    struct Claims {
        std::vector<Construct> operator()(const RegularEntityBase& u) const {
            return {{ConstructKind::Entity, "", u.entity},
                    {ConstructKind::EntityAttribute, u.entity, u.key},
                    {ConstructKind::EntityAttribute, u.entity, u.mandatory}};
        }
        std::vector<Construct> operator()(const SecondarySimpleAttrs& u) const {
            std::vector<Construct> out;
            for (const auto& attr : u.attrs) {
                out.push_back({ConstructKind::EntityAttribute, u.entity, attr});
            }
            return out;
        }
        std::vector<Construct> operator()(const BinaryRelationshipBase& u) const {
            return {{ConstructKind::Relationship, "", u.relationship},
                    {ConstructKind::MinMaxSide, u.relationship, "left"},
                    {ConstructKind::MinMaxSide, u.relationship, "right"}};
        }
        std::vector<Construct> operator()(const OptionalRelationshipAttrs& u) const {
            std::vector<Construct> out;
            for (const auto& attr : u.attrs) {
                out.push_back({ConstructKind::RelationshipAttribute, u.relationship, attr});
            }
            return out;
        }
    };
    return std::visit(Claims{}, unit);
}

std::vector<Violation> verify_partition(const Partition& partition) {
    std::map<Construct, int> wanted;
    for (const auto& construct : model_constructs(partition.source_model)) {
        ++wanted[construct];
    }

    std::map<Construct, int> claimed;
    for (const auto& unit : partition.units) {
        for (const auto& construct : claimed_constructs(unit)) {
            ++claimed[construct];
        }
    }

    std::vector<Violation> out;
    for (const auto& [construct, count] : claimed) {
        if (count > 1) {
            out.push_back({ViolationCode::OverlappingUnits, construct.label(),
                           construct.label() + " is claimed by " + std::to_string(count) +
                               " units"});
        }
        if (wanted.find(construct) == wanted.end()) {
            out.push_back({ViolationCode::UnknownConstruct, construct.label(),
                           construct.label() + " is claimed but the model does not contain it"});
        }
    }
    for (const auto& [construct, count] : wanted) {
        const auto it = claimed.find(construct);
        const int have = it == claimed.end() ? 0 : it->second;
        if (have < count) {
            out.push_back({ViolationCode::UncoveredConstruct, construct.label(),
                           construct.label() + " is not claimed by any unit"});
        }
    }
    return out;
}

std::string partition_to_json(const Partition& partition) {
    struct ToJson {
        ordered_json operator()(const RegularEntityBase& u) const {
            ordered_json j;
            j["kind"] = "regular_entity_base";
            j["label"] = unit_label(u);
            j["entity"] = u.entity;
            j["key"] = u.key;
            j["mandatory"] = u.mandatory;
            return j;
        }
        ordered_json operator()(const SecondarySimpleAttrs& u) const {
            ordered_json j;
            j["kind"] = "secondary_simple_attrs";
            j["label"] = unit_label(u);
            j["entity"] = u.entity;
            j["attrs"] = u.attrs;
            return j;
        }
        ordered_json operator()(const BinaryRelationshipBase& u) const {
            ordered_json j;
            j["kind"] = "binary_relationship_base";
            j["label"] = unit_label(u);
            j["relationship"] = u.relationship;
            j["left"] = u.left;
            j["right"] = u.right;
            j["left_minmax"] = detail::minmax_to_json(u.left_constraint);
            j["right_minmax"] = detail::minmax_to_json(u.right_constraint);
            return j;
        }
        ordered_json operator()(const OptionalRelationshipAttrs& u) const {
            ordered_json j;
            j["kind"] = "optional_relationship_attrs";
            j["label"] = unit_label(u);
            j["relationship"] = u.relationship;
            j["left"] = u.left;
            j["right"] = u.right;
            j["attrs"] = u.attrs;
            return j;
        }
    };

    ordered_json doc;
    doc["units"] = ordered_json::array();
    for (const auto& unit : partition.units) {
        doc["units"].push_back(std::visit(ToJson{}, unit));
    }
    return doc.dump(2) + "\n";
}

}  // namespace ermodel
