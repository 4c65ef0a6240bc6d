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

#ifndef ERMODEL_VALIDATE_HPP
#define ERMODEL_VALIDATE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ermodel/model.hpp"

namespace ermodel {

enum class ViolationCode {
    EmptyModel,
    InvalidIdentifier,
    DuplicateEntityName,
    DuplicateRelationshipName,
    EntityRelationshipNameClash,
    DuplicateAttributeName,
    UnknownEntity,
    RecursiveRelationship,
    MinExceedsMax,
    MaxBelowOne,
    // Partition bookkeeping codes (see partition.hpp).
    OverlappingUnits,
    UncoveredConstruct,
    UnknownConstruct,
};

std::string_view to_string(ViolationCode code);

/// A single well-formedness problem: machine-readable code, the offending
/// element ("Employee", "AssignedTo.left", ...) and a human message.
struct Violation {
    ViolationCode code;
    std::string element;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every invariant of every contained type and returns all problems
/// found; the empty list means the model is well formed. Never throws —
/// any candidate structure is accepted and reported on.
std::vector<Violation> validate_model(const ERModel& model);

}  // namespace ermodel

#endif  // ERMODEL_VALIDATE_HPP
