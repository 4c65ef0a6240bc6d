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

#ifndef ERMODEL_PARSE_RESULT_HPP
#define ERMODEL_PARSE_RESULT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <variant>

namespace ermodel {

/// 1-based position of a token (or error location) in source text.
struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ParseError {
    SourceSpan span;
    std::string expected;
    std::string found;

    /// "3:14: expected identifier, found '{'"
    std::string render() const;
};

/// Value-or-ParseError result of the text decoders.
template <typename T>
class Parsed {
public:
    Parsed(T value) : state_(std::move(value)) {}
    Parsed(ParseError error) : state_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(state_); }
    explicit operator bool() const { return ok(); }

    T& value() { return std::get<T>(state_); }
    const T& value() const { return std::get<T>(state_); }
    const ParseError& error() const { return std::get<ParseError>(state_); }

private:
    std::variant<T, ParseError> state_;
};

}  // namespace ermodel

#endif  // ERMODEL_PARSE_RESULT_HPP
