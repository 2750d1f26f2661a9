// Copyright 2026 The Relcor Authors
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

// JSON literal format for spaces, states, state sets and relations:
//
//   {"space": {"vars": [{"name": "x", "min": 0, "max": 4}]},
//    "pairs": [[{"x": 0}, {"x": 1}], ...]}
//
// Array variables carry "length"; array values are JSON arrays. A variable
// may carry "labels" (one per value), in which case values may also be
// written as label strings.

#ifndef RELCOR_RELATION_JSON_H
#define RELCOR_RELATION_JSON_H

#include <nlohmann/json.hpp>

#include "relcor/relation.h"
#include "relcor/state_space.h"

namespace relcor {

using Json = nlohmann::json;

SpacePtr SpaceFromJson(const Json& json);
Json SpaceToJson(const StateSpace& space);

// Variables missing from `json` take the value closest to zero.
State StateFromJson(const StateSpace& space, const Json& json);
Json StateToJson(const StateSpace& space, const State& state);

Relation RelationFromJson(const Json& json);
Json RelationToJson(const Relation& relation);

Json StateSetToJson(const StateSet& set);

}  // namespace relcor

#endif  // RELCOR_RELATION_JSON_H
