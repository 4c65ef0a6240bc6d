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

#ifndef ERMODEL_MODEL_JSON_HPP
#define ERMODEL_MODEL_JSON_HPP

#include <string>
#include <string_view>

#include "ermodel/model.hpp"
#include "ermodel/parse_result.hpp"

namespace ermodel {

/// Canonical JSON document for a model:
///
///   {"entities": [{"name", "key", "mandatory", "secondary": [...]}, ...],
///    "relationships": [{"name", "left", "right",
///                       "left_minmax": {"min": 0, "max": 3 | "N"},
///                       "right_minmax": {...}, "attrs": [...]}, ...]}
///
/// Keys are emitted in exactly that order; arrays keep declaration order;
/// the unbounded maximum is the string "N". Output is newline-terminated.
std::string model_to_json(const ERModel& model);

/// Inverse of model_to_json. Reports malformed JSON (with the position the
/// JSON reader stopped at) and structurally wrong documents.
Parsed<ERModel> model_from_json(std::string_view text);

}  // namespace ermodel

#endif  // ERMODEL_MODEL_JSON_HPP
