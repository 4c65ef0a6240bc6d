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

#ifndef ERMODEL_DSL_HPP
#define ERMODEL_DSL_HPP

#include <string>
#include <string_view>

#include "ermodel/model.hpp"
#include "ermodel/parse_result.hpp"

namespace ermodel {

/// Parses the textual model DSL:
///
///   model       ::= (entity_decl | rel_decl)*
///   entity_decl ::= "entity" IDENT "{" "key" IDENT attr_decl attr_decl* "}"
///   attr_decl   ::= "attr" IDENT
///   rel_decl    ::= "relationship" IDENT "between" IDENT "(" bound "," bound ")"
///                   "and" IDENT "(" bound "," bound ")" ("{" attr_decl* "}")?
///   bound       ::= INTEGER | "N"          -- "N" legal only as a maximum
///   IDENT       ::= [A-Za-z_][A-Za-z0-9_]*
///
/// "#" starts a comment running to end of line; whitespace between tokens is
/// insignificant. Keywords are positional, so any identifier (including
/// keyword spellings) is a legal name. The first attribute after "key" is
/// the mandatory one; the rest are secondary, in declaration order.
///
/// The parser is purely syntactic: it happily builds models that
/// validate_model() later rejects (recursive relationships, duplicate
/// names, min > max, ...). The error reported is the first syntax error,
/// with its source position.
Parsed<ERModel> parse_model(std::string_view source);

/// Inverse of parse_model for valid models: parse_model(print_model(m))
/// succeeds and reproduces m. Output is byte-stable and newline-terminated.
std::string print_model(const ERModel& model);

}  // namespace ermodel

#endif  // ERMODEL_DSL_HPP
