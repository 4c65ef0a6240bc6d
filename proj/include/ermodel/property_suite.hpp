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

#ifndef ERMODEL_PROPERTY_SUITE_HPP
#define ERMODEL_PROPERTY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ermodel/generate.hpp"

namespace ermodel {

struct SuiteFailure {
    std::uint64_t seed;      // reproduce with GenConfig{.seed = seed}
    std::string property;
    std::string model_json;  // the counterexample model
};

struct CheckReport {
    int iterations = 0;
    std::vector<SuiteFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Test seam: lets the suite's own tests confirm it catches a broken
/// reverse rule. CorruptReverse perturbs the reconstructed model before
/// the round-trip comparison.
enum class SuiteFault { None, CorruptReverse };

/// Runs the whole property battery over `iterations` models generated from
/// seeds config.seed, config.seed + 1, ... Each model is pushed through
/// validation, canonicalization and classification laws, partitioning
/// (verification, unit-count recount, determinism), both text round trips,
/// the forward/reverse round trip, the bijection check, annotation
/// fidelity, the uniqueness-flag law, schema JSON round trip and DDL
/// stability. Failures carry the reproducing seed and the model as JSON.
CheckReport run_property_suite(const GenConfig& config, int iterations,
                               SuiteFault fault = SuiteFault::None);

}  // namespace ermodel

#endif  // ERMODEL_PROPERTY_SUITE_HPP
