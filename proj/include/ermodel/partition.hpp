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

#ifndef ERMODEL_PARTITION_HPP
#define ERMODEL_PARTITION_HPP

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "ermodel/model.hpp"
#include "ermodel/validate.hpp"

namespace ermodel {

// The four construct-unit kinds a model partitions into. A unit is the
// smallest arrangement of model constructs that still means something on
// its own; the two attribute-collection kinds exist only when non-empty.

/// b(e): the entity together with its key and mandatory attribute. The
/// minimal arrangement — exactly three constructs.
struct RegularEntityBase {
    std::string entity;
    AttributeName key;
    AttributeName mandatory;

    friend bool operator==(const RegularEntityBase&, const RegularEntityBase&) = default;
};

/// c(e): the secondary simple attributes of an entity. Never empty.
struct SecondarySimpleAttrs {
    std::string entity;
    std::vector<AttributeName> attrs;

    friend bool operator==(const SecondarySimpleAttrs&, const SecondarySimpleAttrs&) = default;
};

/// b(r): the relationship construct plus its two min-max constraint
/// constructs. Shape is the same for every cardinality class.
struct BinaryRelationshipBase {
    std::string relationship;
    std::string left;
    std::string right;
    MinMaxPair left_constraint;
    MinMaxPair right_constraint;

    friend bool operator==(const BinaryRelationshipBase&, const BinaryRelationshipBase&) = default;
};

/// p(r): the attributes attached to a relationship. Never empty. Carries
/// the endpoint names so its label can be rendered without the model.
struct OptionalRelationshipAttrs {
    std::string relationship;
    std::string left;
    std::string right;
    std::vector<AttributeName> attrs;

    friend bool operator==(const OptionalRelationshipAttrs&, const OptionalRelationshipAttrs&) = default;
};

using ERConstructUnit = std::variant<RegularEntityBase, SecondarySimpleAttrs,
                                     BinaryRelationshipBase, OptionalRelationshipAttrs>;

/// Units in canonical order (per entity b then c, entities sorted by name;
/// then per relationship b then p, sorted by name) plus the canonicalized
/// model they were cut from.
struct Partition {
    std::vector<ERConstructUnit> units;
    ERModel source_model;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// "b(Vehicle)", "c(Vehicle)", "b(AssignedTo(Vehicle,Project))",
/// "p(AssignedTo(Vehicle,Project))".
std::string unit_label(const ERConstructUnit& unit);

/// Cuts a valid model into its construct units. Emits b(e) for every
/// entity, c(e) only when the entity has secondary attributes, b(r) for
/// every relationship, p(r) only when the relationship has attributes,
/// so |units| = E + R + E2 + R2.
///
/// Throws std::invalid_argument when validate_model(model) is non-empty.
Partition partition_model(const ERModel& model);

/// Checks the partition bookkeeping against the source model: every model
/// construct claimed by exactly one unit. Overlaps, gaps and claims on
/// constructs the model does not contain are returned as violations with
/// codes OverlappingUnits / UncoveredConstruct / UnknownConstruct.
std::vector<Violation> verify_partition(const Partition& partition);

/// {"units": [{"kind": "...", "label": "...", ...}, ...]}, canonical order,
/// newline-terminated. Kinds: regular_entity_base, secondary_simple_attrs,
/// binary_relationship_base, optional_relationship_attrs.
std::string partition_to_json(const Partition& partition);

// Construct-level bookkeeping used by verify_partition (and by tests that
// recount units independently).

enum class ConstructKind {
    Entity,
    EntityAttribute,
    Relationship,
    RelationshipAttribute,
    MinMaxSide,
};

/// One addressable construct of a model: an entity, an attribute (owned by
/// an entity or relationship), a relationship, or one side's min-max pair.
struct Construct {
    ConstructKind kind;
    std::string owner;  // owning entity/relationship; empty for top-level
    std::string name;

    std::string label() const;

    friend auto operator<=>(const Construct&, const Construct&) = default;
};

/// Every construct the model contains, as a flat list.
std::vector<Construct> model_constructs(const ERModel& model);

/// The constructs a unit claims ownership of. A RegularEntityBase claims
/// exactly three.
std::vector<Construct> claimed_constructs(const ERConstructUnit& unit);

}  // namespace ermodel

#endif  // ERMODEL_PARTITION_HPP
