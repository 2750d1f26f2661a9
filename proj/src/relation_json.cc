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

#include "relcor/relation_json.h"

#include <algorithm>

#include "relcor/errors.h"

namespace relcor {

namespace {

std::int64_t ValueFromJson(const VarDecl& decl, const Json& json) {
  if (json.is_number_integer()) return json.get<std::int64_t>();
  if (json.is_string() && !decl.labels.empty()) {
    auto it = std::find(decl.labels.begin(), decl.labels.end(),
                        json.get<std::string>());
    if (it != decl.labels.end()) {
      return decl.min + (it - decl.labels.begin());
    }
  }
  throw ModelError("bad value for variable '" + decl.name + "': " +
                   json.dump());
}

Json ValueToJson(const VarDecl& decl, std::int64_t value) {
  if (!decl.labels.empty() && value >= decl.min && value <= decl.max) {
    return decl.labels[static_cast<std::size_t>(value - decl.min)];
  }
  return value;
}

}  // namespace

SpacePtr SpaceFromJson(const Json& json) {
  try {
    std::vector<VarDecl> vars;
    for (const Json& v : json.at("vars")) {
      VarDecl decl;
      decl.name = v.at("name").get<std::string>();
      decl.min = v.at("min").get<std::int64_t>();
      decl.max = v.at("max").get<std::int64_t>();
      decl.length = v.value("length", std::size_t{0});
      if (v.contains("labels")) {
        decl.labels = v.at("labels").get<std::vector<std::string>>();
      }
      vars.push_back(std::move(decl));
    }
    return MakeSpace(std::move(vars));
  } catch (const Json::exception& e) {
    throw ModelError(std::string("bad space literal: ") + e.what());
  }
}

Json SpaceToJson(const StateSpace& space) {
  Json vars = Json::array();
  for (const VarDecl& decl : space.vars()) {
    Json v = {{"name", decl.name}, {"min", decl.min}, {"max", decl.max}};
    if (decl.is_array()) v["length"] = decl.length;
    if (!decl.labels.empty()) v["labels"] = decl.labels;
    vars.push_back(std::move(v));
  }
  return {{"vars", vars}};
}

State StateFromJson(const StateSpace& space, const Json& json) {
  if (!json.is_object()) throw ModelError("state literal must be an object");
  State state = space.ZeroState();
  for (const auto& [name, value] : json.items()) {
    auto var = space.Find(name);
    if (!var) throw ModelError("unknown variable '" + name + "' in state");
    const VarDecl& decl = space.vars()[*var];
    std::size_t offset = space.offset(*var);
    if (decl.is_array()) {
      if (!value.is_array() || value.size() != decl.length) {
        throw ModelError("array '" + name + "' needs " +
                         std::to_string(decl.length) + " elements");
      }
      for (std::size_t k = 0; k < decl.length; ++k) {
        state.slots[offset + k] = ValueFromJson(decl, value[k]);
      }
    } else {
      state.slots[offset] = ValueFromJson(decl, value);
    }
  }
  return state;
}

Json StateToJson(const StateSpace& space, const State& state) {
  Json out = Json::object();
  for (std::size_t i = 0; i < space.vars().size(); ++i) {
    const VarDecl& decl = space.vars()[i];
    std::size_t offset = space.offset(i);
    if (decl.is_array()) {
      Json values = Json::array();
      for (std::size_t k = 0; k < decl.length; ++k) {
        values.push_back(ValueToJson(decl, state.slots[offset + k]));
      }
      out[decl.name] = std::move(values);
    } else {
      out[decl.name] = ValueToJson(decl, state.slots[offset]);
    }
  }
  return out;
}

Relation RelationFromJson(const Json& json) {
  if (!json.is_object() || !json.contains("space")) {
    throw ModelError("relation literal needs a \"space\" member");
  }
  SpacePtr space = SpaceFromJson(json["space"]);
  std::vector<Relation::Pair> pairs;
  try {
    for (const Json& pair : json.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ModelError("relation pair must be a two-element array");
      }
      pairs.emplace_back(space->IndexOf(StateFromJson(*space, pair[0])),
                         space->IndexOf(StateFromJson(*space, pair[1])));
    }
  } catch (const Json::exception& e) {
    throw ModelError(std::string("bad relation literal: ") + e.what());
  }
  return Relation(space, std::move(pairs));
}

Json RelationToJson(const Relation& relation) {
  const StateSpace& space = relation.space();
  Json pairs = Json::array();
  for (const auto& [from, to] : relation.pairs()) {
    pairs.push_back({StateToJson(space, space.StateAt(from)),
                     StateToJson(space, space.StateAt(to))});
  }
  return {{"space", SpaceToJson(space)}, {"pairs", std::move(pairs)}};
}

Json StateSetToJson(const StateSet& set) {
  Json out = Json::array();
  for (StateIndex s : set.members()) {
    out.push_back(StateToJson(set.space(), set.space().StateAt(s)));
  }
  return out;
}

}  // namespace relcor
