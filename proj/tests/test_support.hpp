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

#ifndef ERMODEL_TESTS_TEST_SUPPORT_HPP
#define ERMODEL_TESTS_TEST_SUPPORT_HPP

#include "ermodel/generate.hpp"
#include "ermodel/model.hpp"

namespace ermodel::testing {

inline EntityType employee_entity() {
    return EntityType{"Employee", "Emp_No", "Name", {"Address", "Gender"}};
}

inline ERModel employee_model() {
    return ERModel{{employee_entity()}, {}};
}

/// Two entities with secondary attributes joined by a (0,3)/(1,1)
/// relationship carrying two attributes — the assignment example model.
inline ERModel vehicle_project_model() {
    ERModel model;
    model.entities.push_back({"Vehicle", "VehicleNo", "RegNo", {"Color"}});
    model.entities.push_back({"Project", "ProjectNo", "Name", {"Budget"}});
    model.relationships.push_back({"AssignedTo", "Vehicle", "Project", minmax(0, 3), minmax(1, 1),
                                   {"AssignedDate", "Period"}});
    return model;
}

inline ERModel seeded_model(std::uint64_t seed) {
    GenConfig config;
    config.seed = seed;
    return generate_model(config);
}

}  // namespace ermodel::testing

#endif  // ERMODEL_TESTS_TEST_SUPPORT_HPP
