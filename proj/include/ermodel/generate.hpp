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

#ifndef ERMODEL_GENERATE_HPP
#define ERMODEL_GENERATE_HPP

#include <cstdint>

#include "ermodel/model.hpp"

namespace ermodel {

/// Knobs for the seeded random model generator. The defaults are desk
/// scale: instant to run, still large enough to hit every cardinality
/// class and both bounded and unbounded maxima.
struct GenConfig {
    std::uint64_t seed = 0;
    std::uint32_t max_entities = 6;
    std::uint32_t max_secondary_attrs = 4;
    std::uint32_t max_relationships = 5;
    std::uint32_t max_rel_attrs = 3;
    std::uint32_t max_bound = 9;  // cap for finite max values
    double unbounded_probability = 0.3;
};

/// Deterministic in the seed: the same config produces the same model on
/// every run. Output always passes validate_model — unique names
/// (Entity1..., a1..., Rel1...), endpoints always distinct, every min-max
/// pair drawn with 0 <= min <= max and max >= 1 or unbounded.
///
/// Throws std::invalid_argument when the config breaks its invariants
/// (max_entities >= 1, unbounded_probability in [0,1]).
ERModel generate_model(const GenConfig& config);

}  // namespace ermodel

#endif  // ERMODEL_GENERATE_HPP
