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

#include <string>

#include <doctest.h>

#include "ermodel/dsl.hpp"
#include "ermodel/validate.hpp"
#include "test_support.hpp"

using namespace ermodel;

namespace {

// Byte offset of a 1-based (line, column) position.
std::size_t offset_of(std::string_view text, const SourceSpan& span) {
    std::size_t offset = 0;
    for (std::size_t line = 1; line < span.line; ++line) {
        offset = text.find('\n', offset);
        REQUIRE(offset != std::string_view::npos);
        ++offset;
    }
    return offset + span.column - 1;
}

}  // namespace

TEST_CASE("parses a single entity") {
    const auto parsed = parse_model("entity Employee { key Emp_No attr Name attr Address attr Gender }");
    REQUIRE(parsed.ok());
    REQUIRE(parsed.value().entities.size() == 1);
    const EntityType& entity = parsed.value().entities[0];
    CHECK(entity.name == "Employee");
    CHECK(entity.key_attr == "Emp_No");
    CHECK(entity.mandatory_attr == "Name");
    CHECK(entity.secondary_attrs == std::vector<AttributeName>{"Address", "Gender"});
}

TEST_CASE("empty source parses to an empty model that validation rejects") {
    const auto parsed = parse_model("");
    REQUIRE(parsed.ok());
    CHECK(parsed.value().entities.empty());
    CHECK_FALSE(validate_model(parsed.value()).empty());
}

TEST_CASE("parses a relationship with constraints and attributes") {
    const std::string source =
        "entity Vehicle { key VehicleNo attr RegNo }\n"
        "entity Project { key ProjectNo attr Name }\n"
        "relationship AssignedTo between Vehicle (0,3) and Project (1,1) "
        "{ attr AssignedDate attr Period }\n";
    const auto parsed = parse_model(source);
    REQUIRE(parsed.ok());
    REQUIRE(parsed.value().relationships.size() == 1);
    const RelationshipType& rel = parsed.value().relationships[0];
    CHECK(rel.left_entity == "Vehicle");
    CHECK(rel.left_constraint == minmax(0, 3));
    CHECK(rel.right_constraint == minmax(1, 1));
    CHECK(rel.attrs == std::vector<AttributeName>{"AssignedDate", "Period"});
}

TEST_CASE("parses comments and the unbounded maximum") {
    const std::string source =
        "# staffing\n"
        "entity A { key k attr m } # trailing comment\n"
        "entity B { key k attr m }\n"
        "relationship R between A (1,N) and B (0,5)\n";
    const auto parsed = parse_model(source);
    REQUIRE(parsed.ok());
    CHECK(parsed.value().relationships[0].left_constraint == minmax_unbounded(1));
}

TEST_CASE("an empty attribute block equals no block") {
    const std::string prefix =
        "entity A { key k attr m }\n"
        "entity B { key k attr m }\n";
    const auto with_braces = parse_model(prefix + "relationship R between A (0,1) and B (1,1) {}");
    const auto without = parse_model(prefix + "relationship R between A (0,1) and B (1,1)");
    REQUIRE(with_braces.ok());
    REQUIRE(without.ok());
    CHECK(with_braces.value() == without.value());
}

TEST_CASE("keywords are positional, not reserved") {
    const auto parsed = parse_model("entity entity { key key attr attr attr between }");
    REQUIRE(parsed.ok());
    const EntityType& entity = parsed.value().entities[0];
    CHECK(entity.name == "entity");
    CHECK(entity.key_attr == "key");
    CHECK(entity.mandatory_attr == "attr");
    CHECK(entity.secondary_attrs == std::vector<AttributeName>{"between"});
}

TEST_CASE("recursive relationships are a validation problem, not a parse error") {
    const std::string source =
        "entity Task { key id attr title }\n"
        "relationship DependsOn between Task (0,N) and Task (0,N)\n";
    const auto parsed = parse_model(source);
    REQUIRE(parsed.ok());
    const auto violations = validate_model(parsed.value());
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].code == ViolationCode::RecursiveRelationship);
}

TEST_CASE("parse errors carry a position inside the source") {
    const std::string sources[] = {
        "entity",                                 // ends early
        "entity X { key }",                       // missing identifier
        "entity X { key k }",                     // mandatory attribute required
        "entity X { key k attr }",                // dangling attr
        "entity X { key k attr m",                // unclosed brace
        "relationship R between A (N,1) and B (0,1)",  // N in min position
        "entity X { key k attr m } garbage",      // stray token
        "entity X { key k attr m } @",            // illegal character
        "relationship R between A (0,99999999999) and B (0,1)",  // oversized bound
    };
    for (const std::string& source : sources) {
        CAPTURE(source);
        const auto parsed = parse_model(source);
        REQUIRE_FALSE(parsed.ok());
        const ParseError& error = parsed.error();
        CHECK(error.span.line >= 1);
        CHECK(error.span.column >= 1);
        CHECK(offset_of(source, error.span) <= source.size());
        CHECK_FALSE(error.expected.empty());
        CHECK_FALSE(error.found.empty());
    }
}

TEST_CASE("N in the min position names the offending token") {
    const auto parsed = parse_model("relationship R between A (N,1) and B (0,1)");
    REQUIRE_FALSE(parsed.ok());
    CHECK(parsed.error().found == "'N'");
}

TEST_CASE("prints a single entity in declaration shape") {
    const std::string expected =
        "entity Employee {\n"
        "  key Emp_No\n"
        "  attr Name\n"
        "  attr Address\n"
        "  attr Gender\n"
        "}\n";
    CHECK(print_model(testing::employee_model()) == expected);
}

TEST_CASE("prints entities then relationships") {
    const std::string text = print_model(testing::vehicle_project_model());
    const std::string expected =
        "entity Vehicle {\n"
        "  key VehicleNo\n"
        "  attr RegNo\n"
        "  attr Color\n"
        "}\n"
        "\n"
        "entity Project {\n"
        "  key ProjectNo\n"
        "  attr Name\n"
        "  attr Budget\n"
        "}\n"
        "\n"
        "relationship AssignedTo between Vehicle (0,3) and Project (1,1) {\n"
        "  attr AssignedDate\n"
        "  attr Period\n"
        "}\n";
    CHECK(text == expected);
}

TEST_CASE("printing is byte-stable") {
    const ERModel model = testing::seeded_model(7);
    CHECK(print_model(model) == print_model(model));
}

TEST_CASE("print then parse reproduces 200 random models") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ERModel model = testing::seeded_model(seed);
        const auto parsed = parse_model(print_model(model));
        REQUIRE(parsed.ok());
        CHECK(models_equal(parsed.value(), model));
    }
}
