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

#include "ermodel/generate.hpp"

#include <random>
#include <stdexcept>

namespace ermodel {

namespace {

// mt19937_64 plus modulo draws: fully specified by the standard, so one
// seed yields one model everywhere. std::uniform_int_distribution is
// avoided on purpose — its output differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint32_t pick(std::uint32_t lo, std::uint32_t hi) {
        return lo + static_cast<std::uint32_t>(engine_() % (static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double fraction() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

ERModel generate_model(const GenConfig& config) {
    if (config.max_entities < 1) {
        throw std::invalid_argument("generate_model: max_entities must be at least 1");
    }
    if (config.unbounded_probability < 0.0 || config.unbounded_probability > 1.0) {
        throw std::invalid_argument("generate_model: unbounded_probability must be in [0,1]");
    }

    Rng rng(config.seed);
    ERModel model;

    const std::uint32_t entity_count = rng.pick(1, config.max_entities);
    for (std::uint32_t i = 1; i <= entity_count; ++i) {
        EntityType entity;
        entity.name = "Entity" + std::to_string(i);
        entity.key_attr = "a1";
        entity.mandatory_attr = "a2";
        const std::uint32_t secondary_count = rng.pick(0, config.max_secondary_attrs);
        for (std::uint32_t t = 0; t < secondary_count; ++t) {
            entity.secondary_attrs.push_back("a" + std::to_string(3 + t));
        }
        model.entities.push_back(std::move(entity));
    }

    const auto draw_minmax = [&]() {
        MinMaxPair pair;
        if (rng.fraction() < config.unbounded_probability) {
            pair.min = rng.pick(0, config.max_bound);
            pair.max = std::nullopt;
        } else {
            const std::uint32_t max = rng.pick(1, config.max_bound);
            pair.min = rng.pick(0, max);
            pair.max = max;
        }
        return pair;
    };

    // A relationship needs two distinct endpoints.
    const std::uint32_t rel_count =
        entity_count >= 2 ? rng.pick(0, config.max_relationships) : 0;
    for (std::uint32_t v = 1; v <= rel_count; ++v) {
        RelationshipType rel;
        rel.name = "Rel" + std::to_string(v);
        const std::uint32_t left = rng.pick(0, entity_count - 1);
        std::uint32_t right = rng.pick(0, entity_count - 2);
        if (right >= left) ++right;
        rel.left_entity = model.entities[left].name;
        rel.right_entity = model.entities[right].name;
        rel.left_constraint = draw_minmax();
        rel.right_constraint = draw_minmax();
        const std::uint32_t attr_count = rng.pick(0, config.max_rel_attrs);
        for (std::uint32_t t = 0; t < attr_count; ++t) {
            rel.attrs.push_back("a" + std::to_string(1 + t));
        }
        model.relationships.push_back(std::move(rel));
    }

    return model;
}

}  // namespace ermodel
