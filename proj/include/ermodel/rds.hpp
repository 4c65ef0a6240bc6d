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

#ifndef ERMODEL_RDS_HPP
#define ERMODEL_RDS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ermodel/model.hpp"
#include "ermodel/partition.hpp"

namespace ermodel {

struct Column {
    std::string name;
    bool not_null = false;

    friend bool operator==(const Column&, const Column&) = default;
};

// Relation-schema units: the relational schema is kept partitioned into
// segments that correspond one-for-one with the ER construct units, so the
// unit mapping stays bijective with no case analysis per cardinality class.

/// Image of b(e): relation named after the entity, primary-key column plus
/// the mandatory column, both NOT NULL.
struct BaseRelation {
    std::string relation;
    Column pk_column;
    Column mandatory_column;

    friend bool operator==(const BaseRelation&, const BaseRelation&) = default;
};

/// Image of c(e): nullable columns appended to the entity's relation.
struct SecondaryColumns {
    std::string relation;
    std::vector<Column> columns;

    friend bool operator==(const SecondaryColumns&, const SecondaryColumns&) = default;
};

/// Image of b(r): a dedicated relation per relationship, whatever the
/// cardinality class. The two foreign keys form the composite primary key;
/// a side whose max is 1 additionally gets a UNIQUE flag. The min-max
/// pairs ride along verbatim as annotations — SQL structure cannot express
/// maxima like 3, so the values are metadata, never re-derived.
struct RelationshipRelation {
    std::string relation;
    Column left_fk;
    Column right_fk;
    std::string left_target;
    std::string right_target;
    MinMaxPair left_annotation;
    MinMaxPair right_annotation;
    bool unique_left_fk = false;
    bool unique_right_fk = false;

    friend bool operator==(const RelationshipRelation&, const RelationshipRelation&) = default;
};

/// Image of p(r): nullable columns appended to the relationship's relation.
struct RelationshipAttrColumns {
    std::string relation;
    std::vector<Column> columns;

    friend bool operator==(const RelationshipAttrColumns&, const RelationshipAttrColumns&) = default;
};

using RdsUnit = std::variant<BaseRelation, SecondaryColumns,
                             RelationshipRelation, RelationshipAttrColumns>;

enum class RdsUnitKind {
    BaseRelation,
    SecondaryColumns,
    RelationshipRelation,
    RelationshipAttrColumns,
};

std::string_view to_string(RdsUnitKind kind);
RdsUnitKind unit_kind(const RdsUnit& unit);

/// Identity of an RdsUnit within a schema: (kind, relation) is unique.
struct RdsUnitRef {
    RdsUnitKind kind = RdsUnitKind::BaseRelation;
    std::string relation;

    std::string label() const;  // "base_relation(Vehicle)"

    friend auto operator<=>(const RdsUnitRef&, const RdsUnitRef&) = default;
};

RdsUnitRef unit_ref(const RdsUnit& unit);

struct RelationalSchema {
    std::vector<RdsUnit> units;

    friend bool operator==(const RelationalSchema&, const RelationalSchema&) = default;
};

/// The correspondence from ER construct units (by label) to relation-schema
/// units (by identity), in partition order.
struct UnitMapping {
    std::vector<std::pair<std::string, RdsUnitRef>> pairs;

    friend bool operator==(const UnitMapping&, const UnitMapping&) = default;
};

struct ForwardResult {
    RelationalSchema schema;
    UnitMapping mapping;
};

enum class TransformErrorCode {
    PreconditionFailed,
    ReservedColumnName,
    MalformedSchema,
};

class TransformError : public std::runtime_error {
public:
    TransformError(TransformErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    TransformErrorCode code() const { return code_; }

private:
    TransformErrorCode code_;
};

/// Applies the forward rule table, one RdsUnit per ER construct unit:
///
///   b(e) -> BaseRelation named e, pk = k(e) NOT NULL, mandatory NOT NULL
///   c(e) -> SecondaryColumns on e, one nullable column per attribute
///   b(r) -> RelationshipRelation named r, fk columns "fk_" + entity name,
///           UNIQUE flag per side iff that side's max = 1, both min-max
///           pairs stored as annotations
///   p(r) -> RelationshipAttrColumns on r, one nullable column per attribute
///
/// Relationship attributes starting with "fk_" collide with the generated
/// foreign-key columns and are rejected (ReservedColumnName). Throws
/// TransformError(PreconditionFailed) unless verify_partition is clean.
ForwardResult forward_transform(const Partition& partition);

/// Inverts the forward rule table and reconstructs the ER model, reading
/// min-max values from the annotations only. Throws
/// TransformError(MalformedSchema) when a unit breaks a schema invariant or
/// references a missing relation.
ERModel reverse_transform(const RelationalSchema& schema);

/// Outcome of checking that the unit mapping is one-to-one and onto.
struct BijectionReport {
    struct Clause {
        bool passed = true;
        std::vector<std::string> counterexamples;
    };

    Clause totality;      // every ER unit appears exactly once as a source
    Clause injectivity;   // no RdsUnit appears twice as a target
    Clause surjectivity;  // every RdsUnit of the schema is a target
    Clause cardinality;   // |ER units| == |RDS units|

    bool pass() const {
        return totality.passed && injectivity.passed && surjectivity.passed &&
               cardinality.passed;
    }
};

/// Failures are reported with the offending unit labels, never thrown.
BijectionReport check_bijection(const Partition& partition,
                                const RelationalSchema& schema,
                                const UnitMapping& mapping);

}  // namespace ermodel

#endif  // ERMODEL_RDS_HPP
