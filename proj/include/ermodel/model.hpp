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

#ifndef ERMODEL_MODEL_HPP
#define ERMODEL_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ermodel {

/// Attribute names are plain identifiers. The lexical rule lives in
/// is_identifier(); validation reports names that break it.
using AttributeName = std::string;

/// One side of a binary relationship: an entity participates in at least
/// `min` and at most `max` relationship instances. An absent `max` is the
/// unbounded "N" maximum and classifies as "greater than one".
struct MinMaxPair {
    std::uint32_t min = 0;
    std::optional<std::uint32_t> max;

    bool max_is_one() const { return max.has_value() && *max == 1; }
    bool unbounded() const { return !max.has_value(); }

    friend bool operator==(const MinMaxPair&, const MinMaxPair&) = default;
};

constexpr MinMaxPair minmax(std::uint32_t lo, std::uint32_t hi) {
    return MinMaxPair{lo, hi};
}

constexpr MinMaxPair minmax_unbounded(std::uint32_t lo) {
    return MinMaxPair{lo, std::nullopt};
}

/// A regular (strong) entity type. Every entity carries its own key
/// attribute and exactly one mandatory simple attribute; the mandatory
/// attribute is the first one declared after the key, and the remaining
/// declarations are the secondary attributes, in order. Attribute order
/// is semantic and is preserved everywhere.
struct EntityType {
    std::string name;
    AttributeName key_attr;
    AttributeName mandatory_attr;
    std::vector<AttributeName> secondary_attrs;

    friend bool operator==(const EntityType&, const EntityType&) = default;
};

/// A binary relationship type between two distinct entity types, with one
/// min-max constraint per side and an optional list of attached attributes.
struct RelationshipType {
    std::string name;
    std::string left_entity;
    std::string right_entity;
    MinMaxPair left_constraint;
    MinMaxPair right_constraint;
    std::vector<AttributeName> attrs;

    friend bool operator==(const RelationshipType&, const RelationshipType&) = default;
};

/// The whole conceptual schema. Declaration order of entities and
/// relationships is kept as parsed; canonicalize() sorts it for comparison.
struct ERModel {
    std::vector<EntityType> entities;
    std::vector<RelationshipType> relationships;

    const EntityType* find_entity(std::string_view name) const;
    const RelationshipType* find_relationship(std::string_view name) const;

    friend bool operator==(const ERModel&, const ERModel&) = default;
};

/// Identifier rule shared by the DSL lexer and the validator: letters,
/// digits and underscore, not starting with a digit, non-empty.
bool is_identifier(std::string_view text);

/// Sorts entities and relationships by name. Attribute order inside each
/// element is untouched (the first simple attribute stays mandatory).
/// Idempotent.
ERModel canonicalize(const ERModel& model);

/// Structural equality modulo declaration order of entities/relationships.
bool models_equal(const ERModel& a, const ERModel& b);

}  // namespace ermodel

#endif  // ERMODEL_MODEL_HPP
