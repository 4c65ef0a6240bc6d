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

#ifndef ERMODEL_DDL_HPP
#define ERMODEL_DDL_HPP

#include <string>

#include "ermodel/rds.hpp"

namespace ermodel {

/// Portable CREATE TABLE export: base relations first, then relationship
/// relations, each group alphabetical. UNIQUE flags become UNIQUE
/// constraints; each relationship table is followed by its annotations as
/// structured comments of the exact form
///
///   -- @minmax side=left min=0 max=3
///
/// (max is "N" when unbounded). Byte-stable across runs. Export only — the
/// reverse transformation reads the JSON document, not DDL.
std::string emit_ddl(const RelationalSchema& schema);

}  // namespace ermodel

#endif  // ERMODEL_DDL_HPP
