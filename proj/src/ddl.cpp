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

#include "ermodel/ddl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ermodel {

namespace {

// Attribute domains are out of scope, so every column is TEXT.
constexpr std::string_view kColumnType = "TEXT";

void append_column(std::vector<std::string>& lines, const Column& column) {
    std::string line = column.name + " " + std::string(kColumnType);
    if (column.not_null) line += " NOT NULL";
    lines.push_back(std::move(line));
}

std::string bound_text(const MinMaxPair& pair) {
    std::string out = "min=" + std::to_string(pair.min) + " max=";
    out += pair.max.has_value() ? std::to_string(*pair.max) : "N";
    return out;
}

void emit_table(std::ostringstream& out, const std::string& name,
                const std::vector<std::string>& lines) {
    out << "CREATE TABLE " << name << " (\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out << "  " << lines[i] << (i + 1 < lines.size() ? "," : "") << "\n";
    }
    out << ");\n";
}

}  // namespace

std::string emit_ddl(const RelationalSchema& schema) {
    std::vector<const BaseRelation*> bases;
    std::vector<const RelationshipRelation*> rels;
    std::map<std::string, const SecondaryColumns*> secondary;
    std::map<std::string, const RelationshipAttrColumns*> rel_attrs;
    std::map<std::string, std::string> pk_of;

    for (const auto& unit : schema.units) {
        if (const auto* base = std::get_if<BaseRelation>(&unit)) {
            bases.push_back(base);
            pk_of[base->relation] = base->pk_column.name;
        } else if (const auto* rel = std::get_if<RelationshipRelation>(&unit)) {
            rels.push_back(rel);
        } else if (const auto* cols = std::get_if<SecondaryColumns>(&unit)) {
            secondary[cols->relation] = cols;
        } else if (const auto* cols = std::get_if<RelationshipAttrColumns>(&unit)) {
            rel_attrs[cols->relation] = cols;
        }
    }
    std::sort(bases.begin(), bases.end(),
              [](const auto* a, const auto* b) { return a->relation < b->relation; });
    std::sort(rels.begin(), rels.end(),
              [](const auto* a, const auto* b) { return a->relation < b->relation; });

    std::ostringstream out;
    bool first = true;

    for (const auto* base : bases) {
        if (!first) out << "\n";
        first = false;
        std::vector<std::string> lines;
        append_column(lines, base->pk_column);
        append_column(lines, base->mandatory_column);
        if (const auto it = secondary.find(base->relation); it != secondary.end()) {
            for (const auto& column : it->second->columns) append_column(lines, column);
        }
        lines.push_back("PRIMARY KEY (" + base->pk_column.name + ")");
        emit_table(out, base->relation, lines);
    }

    for (const auto* rel : rels) {
        if (!first) out << "\n";
        first = false;
        std::vector<std::string> lines;
        append_column(lines, rel->left_fk);
        append_column(lines, rel->right_fk);
        if (const auto it = rel_attrs.find(rel->relation); it != rel_attrs.end()) {
            for (const auto& column : it->second->columns) append_column(lines, column);
        }
        lines.push_back("PRIMARY KEY (" + rel->left_fk.name + ", " + rel->right_fk.name + ")");
        if (rel->unique_left_fk) lines.push_back("UNIQUE (" + rel->left_fk.name + ")");
        if (rel->unique_right_fk) lines.push_back("UNIQUE (" + rel->right_fk.name + ")");
        const std::pair<const Column*, const std::string*> fks[] = {
            {&rel->left_fk, &rel->left_target},
            {&rel->right_fk, &rel->right_target},
        };
        for (const auto& [fk, target] : fks) {
            std::string clause = "FOREIGN KEY (" + fk->name + ") REFERENCES " + *target;
            if (const auto it = pk_of.find(*target); it != pk_of.end()) {
                clause += " (" + it->second + ")";
            }
            lines.push_back(std::move(clause));
        }
        emit_table(out, rel->relation, lines);
        out << "-- @minmax side=left " << bound_text(rel->left_annotation) << "\n";
        out << "-- @minmax side=right " << bound_text(rel->right_annotation) << "\n";
    }

    return out.str();
}

}  // namespace ermodel
