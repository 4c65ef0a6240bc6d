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

// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Criteria 4-6 run over the same corpus of 1000 seeded models; criterion 7
// over a 200-model corpus.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ermodel/classify.hpp"
#include "ermodel/ddl.hpp"
#include "ermodel/dsl.hpp"
#include "ermodel/generate.hpp"
#include "ermodel/model_json.hpp"
#include "ermodel/partition.hpp"
#include "ermodel/rds.hpp"
#include "ermodel/schema_json.hpp"
#include "ermodel/validate.hpp"

using namespace ermodel;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& note) {
        if (!condition) {
            pass = false;
            notes.push_back(note);
        }
    }
};

ERModel parse_or_die(const char* source) {
    auto parsed = parse_model(source);
    if (!parsed.ok()) {
        std::fprintf(stderr, "internal: golden model failed to parse: %s\n",
                     parsed.error().render().c_str());
        std::exit(2);
    }
    return std::move(parsed.value());
}

constexpr const char* kEmployeeSource = R"(
entity Employee {
  key Emp_No
  attr Name
  attr Address
  attr Gender
}
)";

constexpr const char* kVehicleProjectSource = R"(
entity Vehicle {
  key VehicleNo
  attr RegNo
  attr Color
}

entity Project {
  key ProjectNo
  attr Name
  attr Budget
}

relationship AssignedTo between Vehicle (0,3) and Project (1,1) {
  attr AssignedDate
  attr Period
}
)";

ERModel corpus_model(std::uint64_t seed) {
    GenConfig config;  // desk-scale defaults
    config.seed = seed;
    return generate_model(config);
}

// E + R + E2 + R2 recounted straight off the model, independent of the
// partitioner's output path.
std::size_t recount_units(const ERModel& model) {
    std::size_t count = model.entities.size() + model.relationships.size();
    for (const auto& entity : model.entities) {
        if (!entity.secondary_attrs.empty()) ++count;
    }
    for (const auto& rel : model.relationships) {
        if (!rel.attrs.empty()) ++count;
    }
    return count;
}

Outcome employee_partition() {
    Outcome result;
    const ERModel model = parse_or_die(kEmployeeSource);
    result.require(validate_model(model).empty(), "employee model must validate");

    const Partition partition = partition_model(model);
    std::vector<std::string> labels;
    for (const auto& unit : partition.units) labels.push_back(unit_label(unit));
    result.require(labels == std::vector<std::string>{"b(Employee)", "c(Employee)"},
                   "expected exactly {b(Employee), c(Employee)}");

    if (partition.units.size() == 2) {
        const auto* secondary = std::get_if<SecondarySimpleAttrs>(&partition.units[1]);
        result.require(secondary != nullptr &&
                           secondary->attrs == std::vector<AttributeName>{"Address", "Gender"},
                       "c(Employee) must contain exactly [Address, Gender]");
    }
    return result;
}

Outcome six_unit_partition() {
    Outcome result;
    const ERModel model = parse_or_die(kVehicleProjectSource);
    const Partition partition = partition_model(model);

    std::multiset<std::string> labels;
    for (const auto& unit : partition.units) labels.insert(unit_label(unit));
    const std::multiset<std::string> expected{
        "b(Vehicle)",  "c(Vehicle)", "b(Project)", "c(Project)",
        "b(AssignedTo(Vehicle,Project))", "p(AssignedTo(Vehicle,Project))"};
    result.require(labels == expected, "expected the exact six-unit label set");
    result.require(partition.units.size() == 6, "expected six units");
    return result;
}

Outcome constraint_classification() {
    Outcome result;
    const struct {
        MinMaxPair left, right;
        Participation p_left, p_right;
        CardinalityRatio ratio;
    } cases[] = {
        {minmax(0, 3), minmax(1, 1), Participation::Partial, Participation::Total,
         {CardinalityKind::OneToMany, Direction::LeftToRight}},
        {minmax(1, 1), minmax(0, 1), Participation::Total, Participation::Partial,
         {CardinalityKind::OneToOne, std::nullopt}},
        {minmax(1, 3), minmax(2, 5), Participation::Total, Participation::Total,
         {CardinalityKind::ManyToMany, std::nullopt}},
    };
    for (const auto& c : cases) {
        result.require(classify_participation(c.left) == c.p_left, "left participation");
        result.require(classify_participation(c.right) == c.p_right, "right participation");
        result.require(classify_cardinality(c.left, c.right) == c.ratio, "cardinality ratio");
    }
    return result;
}

Outcome round_trip_identity() {
    Outcome result;
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const ERModel model = corpus_model(seed);
        const ForwardResult forward = forward_transform(partition_model(model));
        if (!models_equal(reverse_transform(forward.schema), model)) ++failures;
    }
    result.require(failures == 0,
                   std::to_string(failures) + "/1000 models failed the round trip");
    return result;
}

Outcome bijection_property() {
    Outcome result;
    int failures = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const Partition partition = partition_model(corpus_model(seed));
        const ForwardResult forward = forward_transform(partition);
        const BijectionReport report =
            check_bijection(partition, forward.schema, forward.mapping);
        if (!report.pass()) ++failures;
    }
    result.require(failures == 0,
                   std::to_string(failures) + "/1000 mappings were not bijective");
    return result;
}

Outcome partition_laws() {
    Outcome result;
    int verify_failures = 0;
    int count_failures = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const ERModel model = corpus_model(seed);
        const Partition partition = partition_model(model);
        if (!verify_partition(partition).empty()) ++verify_failures;
        if (partition.units.size() != recount_units(model)) ++count_failures;
    }
    result.require(verify_failures == 0,
                   std::to_string(verify_failures) + "/1000 partitions failed verification");
    result.require(count_failures == 0,
                   std::to_string(count_failures) + "/1000 unit counts missed E + R + E2 + R2");
    return result;
}

Outcome format_round_trips() {
    Outcome result;
    int dsl_failures = 0;
    int json_failures = 0;
    int ddl_failures = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const ERModel model = corpus_model(seed);

        const auto reparsed = parse_model(print_model(model));
        if (!reparsed.ok() || !models_equal(reparsed.value(), model)) ++dsl_failures;

        const auto decoded = model_from_json(model_to_json(model));
        if (!decoded.ok() || !models_equal(decoded.value(), model)) ++json_failures;

        const ForwardResult forward = forward_transform(partition_model(model));
        if (emit_ddl(forward.schema) != emit_ddl(forward.schema)) ++ddl_failures;
    }
    result.require(dsl_failures == 0,
                   std::to_string(dsl_failures) + "/200 failed the print/parse round trip");
    result.require(json_failures == 0,
                   std::to_string(json_failures) + "/200 failed the JSON round trip");
    result.require(ddl_failures == 0,
                   std::to_string(ddl_failures) + "/200 DDL exports were not byte-stable");
    return result;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;  // 0 = untimed
    };
    const Criterion criteria[] = {
        {"employee two-unit partition", employee_partition, 1.0},
        {"vehicle-project six-unit partition", six_unit_partition, 1.0},
        {"constraint classification", constraint_classification, 0.0},
        {"round-trip identity x1000", round_trip_identity, 10.0},
        {"bijection property x1000", bijection_property, 0.0},
        {"partition laws x1000", partition_laws, 0.0},
        {"format round trips x200", format_round_trips, 0.0},
    };

    int failed = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = criterion.run();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (criterion.budget_seconds > 0.0 && elapsed.count() > criterion.budget_seconds) {
            outcome.pass = false;
            outcome.notes.push_back("exceeded " + std::to_string(criterion.budget_seconds) +
                                    "s budget");
        }
        std::printf("criterion %d: %-38s %s (%.3fs)\n", index, criterion.name,
                    outcome.pass ? "PASS" : "FAIL", elapsed.count());
        for (const auto& note : outcome.notes) {
            std::printf("  - %s\n", note.c_str());
        }
        if (!outcome.pass) ++failed;
    }

    if (failed != 0) {
        std::printf("%d of %d criteria failed\n", failed, index);
        return 1;
    }
    std::printf("all %d criteria passed\n", index);
    return 0;
}
