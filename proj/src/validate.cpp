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

#include "ermodel/validate.hpp"

#include <set>
#include <string>

namespace ermodel {

std::string_view to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::EmptyModel: return "EmptyModel";
        case ViolationCode::InvalidIdentifier: return "InvalidIdentifier";
        case ViolationCode::DuplicateEntityName: return "DuplicateEntityName";
        case ViolationCode::DuplicateRelationshipName: return "DuplicateRelationshipName";
        case ViolationCode::EntityRelationshipNameClash: return "EntityRelationshipNameClash";
        case ViolationCode::DuplicateAttributeName: return "DuplicateAttributeName";
        case ViolationCode::UnknownEntity: return "UnknownEntity";
        case ViolationCode::RecursiveRelationship: return "RecursiveRelationship";
        case ViolationCode::MinExceedsMax: return "MinExceedsMax";
        case ViolationCode::MaxBelowOne: return "MaxBelowOne";
        case ViolationCode::OverlappingUnits: return "OverlappingUnits";
        case ViolationCode::UncoveredConstruct: return "UncoveredConstruct";
        case ViolationCode::UnknownConstruct: return "UnknownConstruct";
    }
    return "Unknown";
}

namespace {

void check_identifier(std::string_view name, const std::string& element,
                      std::vector<Violation>& out) {
    if (!is_identifier(name)) {
        out.push_back({ViolationCode::InvalidIdentifier, element,
                       "\"" + std::string(name) + "\" is not a legal identifier"});
    }
}

void check_minmax(const MinMaxPair& pair, const std::string& element,
                  std::vector<Violation>& out) {
    if (!pair.max.has_value()) return;  // unbounded max admits any min
    if (*pair.max < 1) {
        out.push_back({ViolationCode::MaxBelowOne, element,
                       "maximum must be at least 1, got " + std::to_string(*pair.max)});
    } else if (pair.min > *pair.max) {
        out.push_back({ViolationCode::MinExceedsMax, element,
                       "minimum " + std::to_string(pair.min) + " exceeds maximum " +
                           std::to_string(*pair.max)});
    }
}

}  // namespace

std::vector<Violation> validate_model(const ERModel& model) {
    std::vector<Violation> out;

    if (model.entities.empty()) {
        out.push_back({ViolationCode::EmptyModel, "model",
                       "a model must contain at least one entity type"});
    }

    std::set<std::string> entity_names;
    for (const auto& entity : model.entities) {
        check_identifier(entity.name, entity.name, out);
        if (!entity_names.insert(entity.name).second) {
            out.push_back({ViolationCode::DuplicateEntityName, entity.name,
                           "entity type \"" + entity.name + "\" declared more than once"});
        }

        check_identifier(entity.key_attr, entity.name + "." + entity.key_attr, out);
        check_identifier(entity.mandatory_attr, entity.name + "." + entity.mandatory_attr, out);

        std::set<std::string> attr_names{entity.key_attr};
        if (!attr_names.insert(entity.mandatory_attr).second) {
            out.push_back({ViolationCode::DuplicateAttributeName,
                           entity.name + "." + entity.mandatory_attr,
                           "attribute name reused within entity \"" + entity.name + "\""});
        }
        for (const auto& attr : entity.secondary_attrs) {
            check_identifier(attr, entity.name + "." + attr, out);
            if (!attr_names.insert(attr).second) {
                out.push_back({ViolationCode::DuplicateAttributeName, entity.name + "." + attr,
                               "attribute name reused within entity \"" + entity.name + "\""});
            }
        }
    }

    std::set<std::string> rel_names;
    for (const auto& rel : model.relationships) {
        check_identifier(rel.name, rel.name, out);
        if (!rel_names.insert(rel.name).second) {
            out.push_back({ViolationCode::DuplicateRelationshipName, rel.name,
                           "relationship type \"" + rel.name + "\" declared more than once"});
        }
        // Entities and relationships share the relation namespace downstream.
        if (entity_names.count(rel.name) != 0) {
            out.push_back({ViolationCode::EntityRelationshipNameClash, rel.name,
                           "relationship name \"" + rel.name + "\" collides with an entity type"});
        }

        if (rel.left_entity == rel.right_entity) {
            out.push_back({ViolationCode::RecursiveRelationship, rel.name,
                           "relationship \"" + rel.name +
                               "\" joins entity \"" + rel.left_entity + "\" to itself"});
        }
        for (const auto* endpoint : {&rel.left_entity, &rel.right_entity}) {
            if (entity_names.count(*endpoint) == 0) {
                out.push_back({ViolationCode::UnknownEntity, rel.name + "." + *endpoint,
                               "relationship \"" + rel.name + "\" references undeclared entity \"" +
                                   *endpoint + "\""});
            }
        }

        std::set<std::string> attr_names;
        for (const auto& attr : rel.attrs) {
            check_identifier(attr, rel.name + "." + attr, out);
            if (!attr_names.insert(attr).second) {
                out.push_back({ViolationCode::DuplicateAttributeName, rel.name + "." + attr,
                               "attribute name reused within relationship \"" + rel.name + "\""});
            }
        }

        check_minmax(rel.left_constraint, rel.name + ".left", out);
        check_minmax(rel.right_constraint, rel.name + ".right", out);
    }

    return out;
}

}  // namespace ermodel
