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

#include "ermodel/model.hpp"

#include <algorithm>
#include <cctype>

namespace ermodel {

const EntityType* ERModel::find_entity(std::string_view name) const {
    for (const auto& entity : entities) {
        if (entity.name == name) return &entity;
    }
    return nullptr;
}

const RelationshipType* ERModel::find_relationship(std::string_view name) const {
    for (const auto& rel : relationships) {
        if (rel.name == name) return &rel;
    }
    return nullptr;
}

bool is_identifier(std::string_view text) {
    if (text.empty()) return false;
    const auto head = static_cast<unsigned char>(text.front());
    if (!std::isalpha(head) && head != '_') return false;
    return std::all_of(text.begin(), text.end(), [](char c) {
        const auto uc = static_cast<unsigned char>(c);
        return std::isalnum(uc) || uc == '_';
    });
}

ERModel canonicalize(const ERModel& model) {
    ERModel out = model;
    std::sort(out.entities.begin(), out.entities.end(),
              [](const EntityType& a, const EntityType& b) { return a.name < b.name; });
    std::sort(out.relationships.begin(), out.relationships.end(),
              [](const RelationshipType& a, const RelationshipType& b) { return a.name < b.name; });
    return out;
}

bool models_equal(const ERModel& a, const ERModel& b) {
    return canonicalize(a) == canonicalize(b);
}

}  // namespace ermodel
