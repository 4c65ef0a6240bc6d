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

// Internal helpers shared by the JSON codecs. Not installed.

#ifndef ERMODEL_SRC_JSON_DETAIL_HPP
#define ERMODEL_SRC_JSON_DETAIL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ermodel/model.hpp"
#include "ermodel/parse_result.hpp"

namespace ermodel::detail {

/// Structural decode problem: the JSON was well formed but the document
/// shape was wrong. Rendered as a ParseError at the API boundary.
struct DecodeFailure {
    std::string where;
    std::string expected;

    ParseError to_error() const {
        return ParseError{SourceSpan{1, 1, 0}, expected, "malformed \"" + where + "\""};
    }
};

SourceSpan span_at_offset(std::string_view text, std::size_t offset);

ParseError json_syntax_error(std::string_view text, const nlohmann::json::parse_error& err);

nlohmann::ordered_json minmax_to_json(const MinMaxPair& pair);
MinMaxPair minmax_from_json(const nlohmann::ordered_json& j, const std::string& where);

std::string require_string(const nlohmann::ordered_json& j, const char* field,
                           const std::string& where);
std::vector<std::string> require_string_array(const nlohmann::ordered_json& j, const char* field,
                                              const std::string& where);

}  // namespace ermodel::detail

#endif  // ERMODEL_SRC_JSON_DETAIL_HPP
