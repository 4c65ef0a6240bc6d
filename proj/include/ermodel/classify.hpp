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

#ifndef ERMODEL_CLASSIFY_HPP
#define ERMODEL_CLASSIFY_HPP

#include <optional>
#include <string>
#include <string_view>

#include "ermodel/model.hpp"

namespace ermodel {

/// Participation of an entity type in a relationship: total (mandatory)
/// when min >= 1, partial (optional) when min = 0.
enum class Participation { Total, Partial };

enum class CardinalityKind { OneToOne, OneToMany, ManyToMany };

/// For one-to-many, the "one" side owns many of the other: LeftToRight
/// means one left entity relates to many right entities.
enum class Direction { LeftToRight, RightToLeft };

struct CardinalityRatio {
    CardinalityKind kind = CardinalityKind::OneToOne;
    std::optional<Direction> direction;  // present iff kind == OneToMany

    friend bool operator==(const CardinalityRatio&, const CardinalityRatio&) = default;
};

Participation classify_participation(const MinMaxPair& pair);

/// Decided purely by the two maxima; an unbounded max counts as "> 1".
CardinalityRatio classify_cardinality(const MinMaxPair& left, const MinMaxPair& right);

std::string_view to_string(Participation p);

/// Renders "one-to-one", "many-to-many" or "one-to-many Vehicle->Project"
/// with the entity names substituted along the direction.
std::string describe_cardinality(const CardinalityRatio& ratio,
                                 std::string_view left_entity,
                                 std::string_view right_entity);

}  // namespace ermodel

#endif  // ERMODEL_CLASSIFY_HPP
