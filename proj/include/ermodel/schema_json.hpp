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

#ifndef ERMODEL_SCHEMA_JSON_HPP
#define ERMODEL_SCHEMA_JSON_HPP

#include <string>
#include <string_view>

#include "ermodel/parse_result.hpp"
#include "ermodel/rds.hpp"

namespace ermodel {

struct SchemaDocument {
    RelationalSchema schema;
    UnitMapping mapping;
};

/// {"units": [...], "mapping": [{"source": "b(Vehicle)",
///  "target": {"kind": "base_relation", "relation": "Vehicle"}}, ...]}.
/// Unit objects mirror the RdsUnit fields with a "kind" discriminator; the
/// unbounded maximum is encoded "N". This document is what the reverse
/// transformation consumes — it preserves the annotations the DDL export
/// can only carry as comments.
std::string schema_to_json(const RelationalSchema& schema, const UnitMapping& mapping);

/// Inverse of schema_to_json. Rejects malformed JSON, unknown unit kinds,
/// and documents without at least one base relation.
Parsed<SchemaDocument> schema_from_json(std::string_view text);

}  // namespace ermodel

#endif  // ERMODEL_SCHEMA_JSON_HPP
