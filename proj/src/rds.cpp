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

#include "ermodel/rds.hpp"

#include <map>
#include <set>

namespace ermodel {

std::string_view to_string(RdsUnitKind kind) {
    switch (kind) {
        case RdsUnitKind::BaseRelation: return "base_relation";
        case RdsUnitKind::SecondaryColumns: return "secondary_columns";
        case RdsUnitKind::RelationshipRelation: return "relationship_relation";
        case RdsUnitKind::RelationshipAttrColumns: return "relationship_attr_columns";
    }
    return "unknown";
}

RdsUnitKind unit_kind(const RdsUnit& unit) {
    struct Kind {
        RdsUnitKind operator()(const BaseRelation&) const { return RdsUnitKind::BaseRelation; }
        RdsUnitKind operator()(const SecondaryColumns&) const { return RdsUnitKind::SecondaryColumns; }
        RdsUnitKind operator()(const RelationshipRelation&) const {
            return RdsUnitKind::RelationshipRelation;
        }
        RdsUnitKind operator()(const RelationshipAttrColumns&) const {
            return RdsUnitKind::RelationshipAttrColumns;
        }
    };
    return std::visit(Kind{}, unit);
}

std::string RdsUnitRef::label() const {
    return std::string(to_string(kind)) + "(" + relation + ")";
}

RdsUnitRef unit_ref(const RdsUnit& unit) {
    struct Relation {
        const std::string& operator()(const BaseRelation& u) const { return u.relation; }
        const std::string& operator()(const SecondaryColumns& u) const { return u.relation; }
        const std::string& operator()(const RelationshipRelation& u) const { return u.relation; }
        const std::string& operator()(const RelationshipAttrColumns& u) const { return u.relation; }
    };
    return RdsUnitRef{unit_kind(unit), std::visit(Relation{}, unit)};
}

namespace {

constexpr std::string_view kFkPrefix = "fk_";

bool has_fk_prefix(std::string_view name) {
    return name.size() >= kFkPrefix.size() && name.substr(0, kFkPrefix.size()) == kFkPrefix;
}

[[noreturn]] void malformed(const std::string& message) {
    throw TransformError(TransformErrorCode::MalformedSchema, message);
}

}  // namespace

ForwardResult forward_transform(const Partition& partition) {
    if (!verify_partition(partition).empty()) {
        throw TransformError(TransformErrorCode::PreconditionFailed,
                             "forward_transform requires a verified partition");
    }

    ForwardResult result;

    struct Forward {
        RdsUnit operator()(const RegularEntityBase& u) const {
            return BaseRelation{u.entity, Column{u.key, true}, Column{u.mandatory, true}};
        }
        RdsUnit operator()(const SecondarySimpleAttrs& u) const {
            SecondaryColumns columns{u.entity, {}};
            for (const auto& attr : u.attrs) columns.columns.push_back(Column{attr, false});
            return columns;
        }
        RdsUnit operator()(const BinaryRelationshipBase& u) const {
            RelationshipRelation rel;
            rel.relation = u.relationship;
            rel.left_fk = Column{std::string(kFkPrefix) + u.left, true};
            rel.right_fk = Column{std::string(kFkPrefix) + u.right, true};
            rel.left_target = u.left;
            rel.right_target = u.right;
            rel.left_annotation = u.left_constraint;
            rel.right_annotation = u.right_constraint;
            rel.unique_left_fk = u.left_constraint.max_is_one();
            rel.unique_right_fk = u.right_constraint.max_is_one();
            return rel;
        }
        RdsUnit operator()(const OptionalRelationshipAttrs& u) const {
            RelationshipAttrColumns columns{u.relationship, {}};
            for (const auto& attr : u.attrs) {
                if (has_fk_prefix(attr)) {
                    throw TransformError(TransformErrorCode::ReservedColumnName,
                                         "attribute \"" + attr + "\" of relationship \"" +
                                             u.relationship +
                                             "\" collides with the reserved fk_ column prefix");
                }
                columns.columns.push_back(Column{attr, false});
            }
            return columns;
        }
    };

    for (const auto& unit : partition.units) {
        RdsUnit rds_unit = std::visit(Forward{}, unit);
        result.mapping.pairs.emplace_back(unit_label(unit), unit_ref(rds_unit));
        result.schema.units.push_back(std::move(rds_unit));
    }
    return result;
}

ERModel reverse_transform(const RelationalSchema& schema) {
    // Index the relations first; every later lookup goes through these.
    std::map<std::string, const BaseRelation*> bases;
    std::map<std::string, const RelationshipRelation*> rels;
    for (const auto& unit : schema.units) {
        if (const auto* base = std::get_if<BaseRelation>(&unit)) {
            if (!bases.emplace(base->relation, base).second ||
                rels.count(base->relation) != 0) {
                malformed("duplicate relation name \"" + base->relation + "\"");
            }
        } else if (const auto* rel = std::get_if<RelationshipRelation>(&unit)) {
            if (!rels.emplace(rel->relation, rel).second ||
                bases.count(rel->relation) != 0) {
                malformed("duplicate relation name \"" + rel->relation + "\"");
            }
        }
    }

    ERModel model;
    std::map<std::string, EntityType*> entities;
    std::map<std::string, RelationshipType*> relationships;

    model.entities.reserve(bases.size());
    model.relationships.reserve(rels.size());

    for (const auto& unit : schema.units) {
        if (const auto* base = std::get_if<BaseRelation>(&unit)) {
            if (!base->pk_column.not_null || !base->mandatory_column.not_null) {
                malformed("base relation \"" + base->relation +
                          "\" must keep its key and mandatory columns NOT NULL");
            }
            EntityType entity;
            entity.name = base->relation;
            entity.key_attr = base->pk_column.name;
            entity.mandatory_attr = base->mandatory_column.name;
            model.entities.push_back(std::move(entity));
        } else if (const auto* rel = std::get_if<RelationshipRelation>(&unit)) {
            if (bases.count(rel->left_target) == 0) {
                malformed("relationship relation \"" + rel->relation +
                          "\" references missing base relation \"" + rel->left_target + "\"");
            }
            if (bases.count(rel->right_target) == 0) {
                malformed("relationship relation \"" + rel->relation +
                          "\" references missing base relation \"" + rel->right_target + "\"");
            }
            if (rel->left_target == rel->right_target) {
                malformed("relationship relation \"" + rel->relation +
                          "\" joins a relation to itself");
            }
            if (rel->unique_left_fk != rel->left_annotation.max_is_one() ||
                rel->unique_right_fk != rel->right_annotation.max_is_one()) {
                malformed("relationship relation \"" + rel->relation +
                          "\" uniqueness flags disagree with its annotations");
            }
            RelationshipType out;
            out.name = rel->relation;
            out.left_entity = rel->left_target;
            out.right_entity = rel->right_target;
            out.left_constraint = rel->left_annotation;
            out.right_constraint = rel->right_annotation;
            model.relationships.push_back(std::move(out));
        }
    }
    for (auto& entity : model.entities) entities[entity.name] = &entity;
    for (auto& rel : model.relationships) relationships[rel.name] = &rel;

    for (const auto& unit : schema.units) {
        if (const auto* columns = std::get_if<SecondaryColumns>(&unit)) {
            const auto it = entities.find(columns->relation);
            if (it == entities.end()) {
                malformed("secondary columns reference missing base relation \"" +
                          columns->relation + "\"");
            }
            if (columns->columns.empty()) {
                malformed("secondary columns of \"" + columns->relation + "\" are empty");
            }
            if (!it->second->secondary_attrs.empty()) {
                malformed("base relation \"" + columns->relation +
                          "\" has more than one secondary-columns unit");
            }
            for (const auto& column : columns->columns) {
                it->second->secondary_attrs.push_back(column.name);
            }
        } else if (const auto* columns = std::get_if<RelationshipAttrColumns>(&unit)) {
            const auto it = relationships.find(columns->relation);
            if (it == relationships.end()) {
                malformed("attribute columns reference missing relationship relation \"" +
                          columns->relation + "\"");
            }
            if (columns->columns.empty()) {
                malformed("attribute columns of \"" + columns->relation + "\" are empty");
            }
            if (!it->second->attrs.empty()) {
                malformed("relationship relation \"" + columns->relation +
                          "\" has more than one attribute-columns unit");
            }
            for (const auto& column : columns->columns) {
                it->second->attrs.push_back(column.name);
            }
        }
    }

    return model;
}

BijectionReport check_bijection(const Partition& partition, const RelationalSchema& schema,
                                const UnitMapping& mapping) {
    BijectionReport report;

    // (a) totality: every ER unit is a source exactly once.
    std::map<std::string, int> sources;
    for (const auto& [source, target] : mapping.pairs) ++sources[source];
    for (const auto& unit : partition.units) {
        const std::string label = unit_label(unit);
        const auto it = sources.find(label);
        const int count = it == sources.end() ? 0 : it->second;
        if (count != 1) {
            report.totality.passed = false;
            report.totality.counterexamples.push_back(
                label + " appears " + std::to_string(count) + " times as a source");
        }
        if (it != sources.end()) sources.erase(it);
    }
    for (const auto& [label, count] : sources) {
        report.totality.passed = false;
        report.totality.counterexamples.push_back(
            label + " is a mapping source but not an ER construct unit");
    }

    // (b) injectivity: no RDS unit is hit twice.
    std::map<RdsUnitRef, std::vector<std::string>> by_target;
    for (const auto& [source, target] : mapping.pairs) by_target[target].push_back(source);
    for (const auto& [target, hits] : by_target) {
        if (hits.size() > 1) {
            report.injectivity.passed = false;
            std::string names;
            for (const auto& hit : hits) names += (names.empty() ? "" : ", ") + hit;
            report.injectivity.counterexamples.push_back(target.label() + " is the target of " +
                                                         names);
        }
    }

    // (c) surjectivity: every RDS unit of the schema is some pair's target.
    for (const auto& unit : schema.units) {
        const RdsUnitRef ref = unit_ref(unit);
        if (by_target.find(ref) == by_target.end()) {
            report.surjectivity.passed = false;
            report.surjectivity.counterexamples.push_back(ref.label() +
                                                          " is not the target of any mapping pair");
        }
    }

    // (d) cardinality equality.
    if (partition.units.size() != schema.units.size()) {
        report.cardinality.passed = false;
        report.cardinality.counterexamples.push_back(
            std::to_string(partition.units.size()) + " ER construct units vs " +
            std::to_string(schema.units.size()) + " relation-schema units");
    }

    return report;
}

}  // namespace ermodel
