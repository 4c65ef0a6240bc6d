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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "ermodel/partition.hpp"
#include "test_support.hpp"

using namespace ermodel;

namespace {

std::vector<std::string> labels(const Partition& partition) {
    std::vector<std::string> out;
    for (const auto& unit : partition.units) out.push_back(unit_label(unit));
    return out;
}

bool has_code(const std::vector<Violation>& violations, ViolationCode code) {
    return std::any_of(violations.begin(), violations.end(),
                       [code](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("an entity with secondaries splits into base and secondary units") {
    const Partition partition = partition_model(testing::employee_model());
    CHECK(labels(partition) == std::vector<std::string>{"b(Employee)", "c(Employee)"});

    const auto* base = std::get_if<RegularEntityBase>(&partition.units[0]);
    REQUIRE(base != nullptr);
    CHECK(base->key == "Emp_No");
    CHECK(base->mandatory == "Name");

    const auto* secondary = std::get_if<SecondarySimpleAttrs>(&partition.units[1]);
    REQUIRE(secondary != nullptr);
    CHECK(secondary->attrs == std::vector<AttributeName>{"Address", "Gender"});
}

TEST_CASE("a minimal entity yields exactly one unit") {
    const ERModel model{{EntityType{"Node", "id", "label", {}}}, {}};
    const Partition partition = partition_model(model);
    REQUIRE(partition.units.size() == 1);
    CHECK(std::holds_alternative<RegularEntityBase>(partition.units[0]));
}

TEST_CASE("the two-entity one-relationship model yields six units in canonical order") {
    const Partition partition = partition_model(testing::vehicle_project_model());
    CHECK(labels(partition) ==
          std::vector<std::string>{"b(Project)", "c(Project)", "b(Vehicle)", "c(Vehicle)",
                                   "b(AssignedTo(Vehicle,Project))",
                                   "p(AssignedTo(Vehicle,Project))"});
}

TEST_CASE("parallel relationships between one entity pair partition separately") {
    ERModel model = testing::vehicle_project_model();
    RelationshipType extra = model.relationships[0];
    extra.name = "ReservedFor";
    extra.attrs = {"Since"};
    model.relationships.push_back(extra);

    REQUIRE(validate_model(model).empty());
    const Partition partition = partition_model(model);
    CHECK(partition.units.size() == 8);
    CHECK(verify_partition(partition).empty());
}

TEST_CASE("relationships without attributes get no p unit") {
    ERModel model = testing::vehicle_project_model();
    model.relationships[0].attrs.clear();
    const Partition partition = partition_model(model);
    CHECK(partition.units.size() == 5);
    for (const auto& unit : partition.units) {
        CHECK_FALSE(std::holds_alternative<OptionalRelationshipAttrs>(unit));
    }
}

TEST_CASE("partitioning an invalid model throws") {
    CHECK_THROWS_AS(partition_model(ERModel{}), std::invalid_argument);
}

TEST_CASE("partitioning is deterministic across declaration order") {
    const ERModel model = testing::vehicle_project_model();
    ERModel shuffled = model;
    std::swap(shuffled.entities[0], shuffled.entities[1]);
    CHECK(partition_model(model) == partition_model(shuffled));
    CHECK(partition_model(model) == partition_model(model));
}

TEST_CASE("unit labels substitute names into the notation") {
    CHECK(unit_label(RegularEntityBase{"Employee", "Emp_No", "Name"}) == "b(Employee)");
    CHECK(unit_label(BinaryRelationshipBase{"AssignedTo", "Vehicle", "Project", minmax(0, 3),
                                            minmax(1, 1)}) == "b(AssignedTo(Vehicle,Project))");
    CHECK(unit_label(OptionalRelationshipAttrs{"AssignedTo", "Vehicle", "Project", {"Period"}}) ==
          "p(AssignedTo(Vehicle,Project))");
}

TEST_CASE("a base unit claims exactly three constructs") {
    const Partition partition = partition_model(testing::vehicle_project_model());
    for (const auto& unit : partition.units) {
        if (std::holds_alternative<RegularEntityBase>(unit)) {
            CHECK(claimed_constructs(unit).size() == 3);
        }
    }
}

TEST_CASE("verify_partition accepts every produced partition") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Partition partition = partition_model(testing::seeded_model(seed));
        CHECK(verify_partition(partition).empty());
    }
}

TEST_CASE("a duplicated unit overlaps") {
    Partition partition = partition_model(testing::employee_model());
    partition.units.push_back(partition.units[1]);  // second c(Employee)
    CHECK(has_code(verify_partition(partition), ViolationCode::OverlappingUnits));
}

TEST_CASE("a dropped unit leaves constructs uncovered") {
    Partition partition = partition_model(testing::vehicle_project_model());
    partition.units.pop_back();  // p(AssignedTo)
    const auto violations = verify_partition(partition);
    CHECK(has_code(violations, ViolationCode::UncoveredConstruct));
    CHECK_FALSE(has_code(violations, ViolationCode::OverlappingUnits));
}

TEST_CASE("a unit for a foreign construct is flagged") {
    Partition partition = partition_model(testing::employee_model());
    partition.units.push_back(RegularEntityBase{"Ghost", "id", "name"});
    CHECK(has_code(verify_partition(partition), ViolationCode::UnknownConstruct));
}

TEST_CASE("unit count follows E + R + E2 + R2 on random models") {
    for (std::uint64_t seed = 200; seed < 400; ++seed) {
        const ERModel model = testing::seeded_model(seed);
        std::size_t expected = model.entities.size() + model.relationships.size();
        for (const auto& entity : model.entities) {
            if (!entity.secondary_attrs.empty()) ++expected;
        }
        for (const auto& rel : model.relationships) {
            if (!rel.attrs.empty()) ++expected;
        }
        CHECK(partition_model(model).units.size() == expected);
    }
}

TEST_CASE("no attribute-collection unit is ever empty") {
    for (std::uint64_t seed = 400; seed < 500; ++seed) {
        const Partition partition = partition_model(testing::seeded_model(seed));
        for (const auto& unit : partition.units) {
            if (const auto* c = std::get_if<SecondarySimpleAttrs>(&unit)) {
                CHECK_FALSE(c->attrs.empty());
            } else if (const auto* p = std::get_if<OptionalRelationshipAttrs>(&unit)) {
                CHECK_FALSE(p->attrs.empty());
            }
        }
    }
}

TEST_CASE("partition JSON lists units with kind and label") {
    const Partition partition = partition_model(testing::vehicle_project_model());
    const auto doc = nlohmann::json::parse(partition_to_json(partition));
    REQUIRE(doc["units"].size() == 6);
    CHECK(doc["units"][0]["kind"] == "regular_entity_base");
    CHECK(doc["units"][0]["label"] == "b(Project)");
    CHECK(doc["units"][4]["kind"] == "binary_relationship_base");
    CHECK(doc["units"][4]["left_minmax"]["max"] == 3);
    CHECK(doc["units"][5]["kind"] == "optional_relationship_attrs");
    CHECK(doc["units"][5]["attrs"] == nlohmann::json::array({"AssignedDate", "Period"}));
}
