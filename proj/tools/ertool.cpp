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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ermodel/classify.hpp"
#include "ermodel/ddl.hpp"
#include "ermodel/dsl.hpp"
#include "ermodel/generate.hpp"
#include "ermodel/model_json.hpp"
#include "ermodel/partition.hpp"
#include "ermodel/property_suite.hpp"
#include "ermodel/rds.hpp"
#include "ermodel/schema_json.hpp"
#include "ermodel/validate.hpp"

namespace {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kParseError = 2;
constexpr int kRoundTripFailure = 3;
constexpr int kUsageError = 4;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

// Loads, parses and (optionally) validates a DSL model file. On failure the
// diagnostic goes to stderr and the process exit code is returned.
class ModelLoader {
public:
    explicit ModelLoader(const std::string& path) : path_(path) {}

    int load() {
        const auto text = read_file(path_);
        if (!text.has_value()) {
            std::cerr << "ertool: cannot read " << path_ << "\n";
            return kUsageError;
        }
        auto parsed = ermodel::parse_model(*text);
        if (!parsed.ok()) {
            std::cerr << path_ << ":" << parsed.error().render() << "\n";
            return kParseError;
        }
        model_ = std::move(parsed.value());
        return kOk;
    }

    int load_valid() {
        if (const int rc = load(); rc != kOk) return rc;
        const auto violations = ermodel::validate_model(model_);
        if (!violations.empty()) {
            for (const auto& v : violations) {
                std::cerr << path_ << ": [" << ermodel::to_string(v.code) << "] " << v.element
                          << ": " << v.message << "\n";
            }
            return kValidationFailure;
        }
        return kOk;
    }

    const ermodel::ERModel& model() const { return model_; }

private:
    std::string path_;
    ermodel::ERModel model_;
};

void print_entity_diff(const ermodel::EntityType& a, const ermodel::EntityType& b) {
    if (a.key_attr != b.key_attr) {
        std::cout << "  entity " << a.name << ": key " << a.key_attr << " != " << b.key_attr << "\n";
    }
    if (a.mandatory_attr != b.mandatory_attr) {
        std::cout << "  entity " << a.name << ": mandatory " << a.mandatory_attr
                  << " != " << b.mandatory_attr << "\n";
    }
    if (a.secondary_attrs != b.secondary_attrs) {
        std::cout << "  entity " << a.name << ": secondary attributes differ\n";
    }
}

void print_relationship_diff(const ermodel::RelationshipType& a, const ermodel::RelationshipType& b) {
    if (a.left_entity != b.left_entity || a.right_entity != b.right_entity) {
        std::cout << "  relationship " << a.name << ": endpoints differ\n";
    }
    if (a.left_constraint != b.left_constraint || a.right_constraint != b.right_constraint) {
        std::cout << "  relationship " << a.name << ": min-max constraints differ\n";
    }
    if (a.attrs != b.attrs) {
        std::cout << "  relationship " << a.name << ": attributes differ\n";
    }
}

// Structural diff of two models, canonical order, one line per difference.
void print_model_diff(const ermodel::ERModel& before, const ermodel::ERModel& after) {
    const ermodel::ERModel a = ermodel::canonicalize(before);
    const ermodel::ERModel b = ermodel::canonicalize(after);

    for (const auto& entity : a.entities) {
        const auto* other = b.find_entity(entity.name);
        if (other == nullptr) {
            std::cout << "  entity " << entity.name << ": missing after round trip\n";
        } else {
            print_entity_diff(entity, *other);
        }
    }
    for (const auto& entity : b.entities) {
        if (a.find_entity(entity.name) == nullptr) {
            std::cout << "  entity " << entity.name << ": only present after round trip\n";
        }
    }
    for (const auto& rel : a.relationships) {
        const auto* other = b.find_relationship(rel.name);
        if (other == nullptr) {
            std::cout << "  relationship " << rel.name << ": missing after round trip\n";
        } else {
            print_relationship_diff(rel, *other);
        }
    }
    for (const auto& rel : b.relationships) {
        if (a.find_relationship(rel.name) == nullptr) {
            std::cout << "  relationship " << rel.name << ": only present after round trip\n";
        }
    }
}

int cmd_validate(const std::string& path) {
    ModelLoader loader(path);
    if (const int rc = loader.load(); rc != kOk) return rc;
    const auto violations = ermodel::validate_model(loader.model());
    for (const auto& v : violations) {
        std::cout << "[" << ermodel::to_string(v.code) << "] " << v.element << ": " << v.message
                  << "\n";
    }
    return violations.empty() ? kOk : kValidationFailure;
}

int cmd_partition(const std::string& path, const std::string& json_out) {
    ModelLoader loader(path);
    if (const int rc = loader.load_valid(); rc != kOk) return rc;
    const ermodel::Partition partition = ermodel::partition_model(loader.model());
    if (!json_out.empty()) {
        if (!write_file(json_out, ermodel::partition_to_json(partition))) {
            std::cerr << "ertool: cannot write " << json_out << "\n";
            return kUsageError;
        }
        return kOk;
    }
    for (const auto& unit : partition.units) {
        std::cout << ermodel::unit_label(unit) << "\n";
    }
    return kOk;
}

int cmd_classify(const std::string& path) {
    ModelLoader loader(path);
    if (const int rc = loader.load_valid(); rc != kOk) return rc;
    for (const auto& rel : loader.model().relationships) {
        const auto ratio = ermodel::classify_cardinality(rel.left_constraint, rel.right_constraint);
        std::cout << rel.name << ": " << rel.left_entity << " "
                  << ermodel::to_string(ermodel::classify_participation(rel.left_constraint))
                  << ", " << rel.right_entity << " "
                  << ermodel::to_string(ermodel::classify_participation(rel.right_constraint))
                  << ", " << ermodel::describe_cardinality(ratio, rel.left_entity, rel.right_entity)
                  << "\n";
    }
    return kOk;
}

int cmd_transform(const std::string& path, const std::string& out, const std::string& ddl_out) {
    ModelLoader loader(path);
    if (const int rc = loader.load_valid(); rc != kOk) return rc;
    const auto partition = ermodel::partition_model(loader.model());
    ermodel::ForwardResult forward;
    try {
        forward = ermodel::forward_transform(partition);
    } catch (const ermodel::TransformError& err) {
        std::cerr << "ertool: " << err.what() << "\n";
        return kValidationFailure;
    }
    if (!write_file(out, ermodel::schema_to_json(forward.schema, forward.mapping))) {
        std::cerr << "ertool: cannot write " << out << "\n";
        return kUsageError;
    }
    if (!ddl_out.empty() && !write_file(ddl_out, ermodel::emit_ddl(forward.schema))) {
        std::cerr << "ertool: cannot write " << ddl_out << "\n";
        return kUsageError;
    }
    return kOk;
}

int cmd_reverse(const std::string& path, const std::string& out) {
    const auto text = read_file(path);
    if (!text.has_value()) {
        std::cerr << "ertool: cannot read " << path << "\n";
        return kUsageError;
    }
    const auto parsed = ermodel::schema_from_json(*text);
    if (!parsed.ok()) {
        std::cerr << path << ":" << parsed.error().render() << "\n";
        return kParseError;
    }
    ermodel::ERModel model;
    try {
        model = ermodel::reverse_transform(parsed.value().schema);
    } catch (const ermodel::TransformError& err) {
        std::cerr << path << ": " << err.what() << "\n";
        return kParseError;
    }
    if (!write_file(out, ermodel::print_model(model))) {
        std::cerr << "ertool: cannot write " << out << "\n";
        return kUsageError;
    }
    return kOk;
}

int cmd_roundtrip(const std::string& path) {
    ModelLoader loader(path);
    if (const int rc = loader.load_valid(); rc != kOk) return rc;
    const auto partition = ermodel::partition_model(loader.model());
    ermodel::ForwardResult forward;
    try {
        forward = ermodel::forward_transform(partition);
    } catch (const ermodel::TransformError& err) {
        std::cerr << "ertool: " << err.what() << "\n";
        return kValidationFailure;
    }
    const ermodel::ERModel reconstructed = ermodel::reverse_transform(forward.schema);

    bool failed = false;
    if (!ermodel::models_equal(reconstructed, loader.model())) {
        std::cout << "round trip mismatch:\n";
        print_model_diff(loader.model(), reconstructed);
        failed = true;
    }
    const auto report = ermodel::check_bijection(partition, forward.schema, forward.mapping);
    if (!report.pass()) {
        std::cout << "unit mapping is not a bijection:\n";
        for (const auto* clause : {&report.totality, &report.injectivity, &report.surjectivity,
                                   &report.cardinality}) {
            for (const auto& example : clause->counterexamples) {
                std::cout << "  " << example << "\n";
            }
        }
        failed = true;
    }
    return failed ? kRoundTripFailure : kOk;
}

int cmd_gen(const ermodel::GenConfig& config) {
    std::cout << ermodel::print_model(ermodel::generate_model(config));
    return kOk;
}

int cmd_check(std::uint64_t seed, int iterations) {
    ermodel::GenConfig config;
    config.seed = seed;
    const auto report = ermodel::run_property_suite(config, iterations);
    std::cout << report.iterations << " iterations, " << report.failures.size() << " failures\n";
    for (const auto& failure : report.failures) {
        std::cout << "FAIL " << failure.property << " (seed " << failure.seed << ")\n";
        std::cerr << failure.model_json;
    }
    return report.ok() ? kOk : kRoundTripFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ER model partitioning, classification and relational round-trip tool"};
    app.require_subcommand(1);

    std::string model_path;
    std::string schema_path;
    std::string json_out;
    std::string out_path;
    std::string ddl_path;
    std::uint64_t seed = 0;
    int iterations = 1000;
    ermodel::GenConfig gen_config;

    auto* validate = app.add_subcommand("validate", "Check a model file for violations");
    validate->add_option("file", model_path, "model file (.er)")->required();

    auto* partition = app.add_subcommand("partition", "List the model's construct units");
    partition->add_option("file", model_path, "model file (.er)")->required();
    partition->add_option("--json", json_out, "write partition JSON here instead");

    auto* classify = app.add_subcommand("classify", "Per relationship: participation and cardinality");
    classify->add_option("file", model_path, "model file (.er)")->required();

    auto* transform = app.add_subcommand("transform", "Forward-transform a model to a schema document");
    transform->add_option("file", model_path, "model file (.er)")->required();
    transform->add_option("--out", out_path, "schema JSON output path")->required();
    transform->add_option("--ddl", ddl_path, "also write CREATE TABLE DDL here");

    auto* reverse = app.add_subcommand("reverse", "Rebuild the model from a schema document");
    reverse->add_option("schema", schema_path, "schema JSON file")->required();
    reverse->add_option("--out", out_path, "model output path (.er)")->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "Verify forward/reverse identity and bijection");
    roundtrip->add_option("file", model_path, "model file (.er)")->required();

    auto* gen = app.add_subcommand("gen", "Emit a seeded random model to stdout");
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--entities", gen_config.max_entities, "entity count cap")
        ->check(CLI::PositiveNumber);
    gen->add_option("--rels", gen_config.max_relationships, "relationship count cap");

    auto* check = app.add_subcommand("check", "Run the property suite over seeded models");
    check->add_option("--seed", seed, "base seed")->required();
    check->add_option("--iterations", iterations, "model count")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsageError;
    }

    if (*validate) return cmd_validate(model_path);
    if (*partition) return cmd_partition(model_path, json_out);
    if (*classify) return cmd_classify(model_path);
    if (*transform) return cmd_transform(model_path, out_path, ddl_path);
    if (*reverse) return cmd_reverse(schema_path, out_path);
    if (*roundtrip) return cmd_roundtrip(model_path);
    if (*gen) {
        gen_config.seed = seed;
        return cmd_gen(gen_config);
    }
    if (*check) return cmd_check(seed, iterations);
    return kUsageError;
}
