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

#include "ermodel/classify.hpp"

namespace ermodel {

Participation classify_participation(const MinMaxPair& pair) {
    return pair.min == 0 ? Participation::Partial : Participation::Total;
}

CardinalityRatio classify_cardinality(const MinMaxPair& left, const MinMaxPair& right) {
    const bool left_one = left.max_is_one();
    const bool right_one = right.max_is_one();
    if (left_one && right_one) return {CardinalityKind::OneToOne, std::nullopt};
    if (!left_one && right_one) return {CardinalityKind::OneToMany, Direction::LeftToRight};
    if (left_one && !right_one) return {CardinalityKind::OneToMany, Direction::RightToLeft};
    return {CardinalityKind::ManyToMany, std::nullopt};
}

std::string_view to_string(Participation p) {
    return p == Participation::Total ? "total" : "partial";
}

std::string describe_cardinality(const CardinalityRatio& ratio,
                                 std::string_view left_entity,
                                 std::string_view right_entity) {
    switch (ratio.kind) {
        case CardinalityKind::OneToOne:
            return "one-to-one";
        case CardinalityKind::ManyToMany:
            return "many-to-many";
        case CardinalityKind::OneToMany:
            break;
    }
    if (ratio.direction == Direction::LeftToRight) {
        return "one-to-many " + std::string(left_entity) + "->" + std::string(right_entity);
    }
    return "one-to-many " + std::string(right_entity) + "->" + std::string(left_entity);
}

}  // namespace ermodel
