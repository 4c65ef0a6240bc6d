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

#include "ermodel/property_suite.hpp"

#include <set>
#include <stdexcept>

#include "ermodel/classify.hpp"
#include "ermodel/ddl.hpp"
#include "ermodel/dsl.hpp"
#include "ermodel/model_json.hpp"
#include "ermodel/partition.hpp"
#include "ermodel/rds.hpp"
#include "ermodel/schema_json.hpp"
#include "ermodel/validate.hpp"

namespace ermodel {

namespace {

// Recounts E + R + E2 + R2 straight off the model, independently of the
// partitioner's unit list.
std::size_t expected_unit_count(const ERModel& model) {
    std::size_t count = model.entities.size() + model.relationships.size();
    for (const auto& entity : model.entities) {
        if (!entity.secondary_attrs.empty()) ++count;
    }
    for (const auto& rel : model.relationships) {
        if (!rel.attrs.empty()) ++count;
    }
    return count;
}

bool classification_laws_hold(const ERModel& model) {
    for (const auto& rel : model.relationships) {
        for (const auto* side : {&rel.left_constraint, &rel.right_constraint}) {
            const Participation p = classify_participation(*side);
            const bool partial = p == Participation::Partial;
            if (partial != (side->min == 0)) return false;
        }
        const CardinalityRatio forward = classify_cardinality(rel.left_constraint,
                                                              rel.right_constraint);
        if ((forward.kind == CardinalityKind::OneToMany) != forward.direction.has_value()) {
            return false;
        }
        // Swapping the sides must flip the direction and fix everything else.
        const CardinalityRatio swapped = classify_cardinality(rel.right_constraint,
                                                              rel.left_constraint);
        if (swapped.kind != forward.kind) return false;
        if (forward.kind == CardinalityKind::OneToMany) {
            if (forward.direction == swapped.direction) return false;
        }
    }
    return true;
}

bool flag_laws_hold(const RelationalSchema& schema, const ERModel& model) {
    for (const auto& unit : schema.units) {
        const auto* rel = std::get_if<RelationshipRelation>(&unit);
        if (rel == nullptr) continue;
        if (rel->unique_left_fk != rel->left_annotation.max_is_one()) return false;
        if (rel->unique_right_fk != rel->right_annotation.max_is_one()) return false;
        // Annotation fidelity: values equal the source constraints exactly.
        const RelationshipType* source = model.find_relationship(rel->relation);
        if (source == nullptr) return false;
        if (rel->left_annotation != source->left_constraint) return false;
        if (rel->right_annotation != source->right_constraint) return false;
    }
    return true;
}

}  // namespace

CheckReport run_property_suite(const GenConfig& config, int iterations, SuiteFault fault) {
    if (iterations < 1) {
        throw std::invalid_argument("run_property_suite: iterations must be at least 1");
    }

    CheckReport report;
    report.iterations = iterations;

    for (int i = 0; i < iterations; ++i) {
        GenConfig derived = config;
        derived.seed = config.seed + static_cast<std::uint64_t>(i);

        const ERModel model = generate_model(derived);
        const auto fail = [&](const char* property) {
            report.failures.push_back({derived.seed, property, model_to_json(model)});
        };

        if (!validate_model(model).empty()) {
            fail("validate_clean");
            continue;
        }

        const ERModel canonical = canonicalize(model);
        if (canonicalize(canonical) != canonical || !models_equal(canonical, model)) {
            fail("canonicalize_idempotent");
        }
        if (!classification_laws_hold(model)) {
            fail("classification_laws");
        }

        const Partition partition = partition_model(model);
        if (!verify_partition(partition).empty()) {
            fail("partition_verifies");
        }
        if (partition.units.size() != expected_unit_count(model)) {
            fail("unit_count_formula");
        }
        if (partition_model(canonical) != partition) {
            fail("partition_deterministic");
        }

        const auto reparsed = parse_model(print_model(model));
        if (!reparsed.ok() || !models_equal(reparsed.value(), model)) {
            fail("dsl_roundtrip");
        }
        const auto redecoded = model_from_json(model_to_json(model));
        if (!redecoded.ok() || !models_equal(redecoded.value(), model)) {
            fail("json_roundtrip");
        }

        const ForwardResult forward = forward_transform(partition);
        ERModel reconstructed = reverse_transform(forward.schema);
        if (fault == SuiteFault::CorruptReverse && !reconstructed.entities.empty()) {
            reconstructed.entities.front().mandatory_attr += "_x";
        }
        if (!models_equal(reconstructed, model)) {
            fail("forward_reverse_roundtrip");
        }
        if (!check_bijection(partition, forward.schema, forward.mapping).pass()) {
            fail("bijection");
        }
        if (!flag_laws_hold(forward.schema, model)) {
            fail("uniqueness_and_annotation_laws");
        }

        const auto schema_doc = schema_from_json(schema_to_json(forward.schema, forward.mapping));
        if (!schema_doc.ok() || schema_doc.value().schema != forward.schema ||
            schema_doc.value().mapping != forward.mapping) {
            fail("schema_json_roundtrip");
        }
        if (emit_ddl(forward.schema) != emit_ddl(forward.schema)) {
            fail("ddl_stable");
        }
    }

    return report;
}

}  // namespace ermodel
