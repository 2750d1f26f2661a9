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


#include "relcor/spec.h"

#include <cstdlib>
#include <iostream>
#include <set>

#include "lowered.h"
#include "relcor/errors.h"
#include "relcor/parser.h"

namespace relcor {

namespace {

void CollectInputReads(const Expr& expr, std::set<std::string>& names) {
  if ((expr.kind == Expr::Kind::kVar || expr.kind == Expr::Kind::kArrayRead) &&
      !expr.primed) {
    names.insert(expr.name);
  }
  if (expr.lhs) CollectInputReads(*expr.lhs, names);
  if (expr.rhs) CollectInputReads(*expr.rhs, names);
}

void CollectInputReads(const Cond& cond, std::set<std::string>& names) {
  if (cond.lhs) CollectInputReads(*cond.lhs, names);
  if (cond.rhs) CollectInputReads(*cond.rhs, names);
  if (cond.left) CollectInputReads(*cond.left, names);
  if (cond.right) CollectInputReads(*cond.right, names);
}

bool Verbose() { return std::getenv("RELCOR_VERBOSE") != nullptr; }

}  // namespace

Spec Spec::Enumerated(Relation relation) {
  Spec spec;
  spec.kind_ = Kind::kEnumerated;
  spec.space_ = relation.space_ptr();
  spec.relation_ = std::move(relation);
  return spec;
}

Spec Spec::Predicate(StateSpace space, const std::string& dom,
                     const std::string& rel) {
  Spec spec;
  spec.kind_ = Kind::kPredicate;
  spec.space_ = std::make_shared<const StateSpace>(std::move(space));
  spec.dom_text_ = dom;
  spec.rel_text_ = rel;
  spec.dom_ = ParsePredicate(dom, *spec.space_, false);
  spec.rel_ = ParsePredicate(rel, *spec.space_, true);
  spec.lowered_dom_ = internal::LowerCond(*spec.dom_, *spec.space_);
  spec.lowered_rel_ = internal::LowerCond(*spec.rel_, *spec.space_);
  return spec;
}

bool Spec::InDom(const State& input) const {
  if (kind_ == Kind::kEnumerated) {
    if (!space_->Contains(input)) return false;
    return !relation_.Images(space_->IndexOf(input)).empty();
  }
  internal::Truth truth =
      internal::Eval(*lowered_dom_, {input.slots.data(), nullptr});
  if (truth == internal::Truth::kUndefined) {
    if (Verbose()) {
      std::cerr << "relcor: domain predicate undefined at "
                << space_->Format(input) << "\n";
    }
    return false;
  }
  return truth == internal::Truth::kTrue;
}

bool Spec::Holds(const State& input, const State& output) const {
  if (kind_ == Kind::kEnumerated) {
    if (!space_->Contains(input) || !space_->Contains(output)) return false;
    return relation_.Contains(space_->IndexOf(input), space_->IndexOf(output));
  }
  internal::Truth truth = internal::Eval(
      *lowered_rel_, {input.slots.data(), output.slots.data()});
  if (truth == internal::Truth::kUndefined && Verbose()) {
    std::cerr << "relcor: relation predicate undefined at "
              << space_->Format(input) << " -> " << space_->Format(output)
              << "\n";
  }
  return truth == internal::Truth::kTrue;
}

OracleVerdict Spec::AbsOracle(const State& input,
                              const ExecOutcome& outcome) const {
  if (!InDom(input)) return {true, true};
  return {outcome.is_final() && Holds(input, outcome.final_state), false};
}

Relation Spec::Enumerate(const Limits& limits) const {
  if (kind_ == Kind::kEnumerated) return relation_;
  StateIndex count = space_->CheckedSize(limits.max_pairs);
  if (count > 0 && count > limits.max_pairs / count) {
    throw CapacityError("enumerating the specification visits " +
                        std::to_string(count) + "^2 pairs, above the cap");
  }
  std::vector<Relation::Pair> pairs;
  State input;
  State output;
  for (StateIndex from = 0; from < count; ++from) {
    input = space_->StateAt(from);
    if (!InDom(input)) continue;
    for (StateIndex to = 0; to < count; ++to) {
      output = space_->StateAt(to);
      if (Holds(input, output)) pairs.emplace_back(from, to);
    }
  }
  return FromSortedPairs(space_, std::move(pairs));
}

std::vector<std::string> Spec::UnconstrainedVars() const {
  std::vector<std::string> out;
  if (kind_ == Kind::kEnumerated) return out;
  std::set<std::string> read;
  CollectInputReads(*dom_, read);
  CollectInputReads(*rel_, read);
  for (const VarDecl& decl : space_->vars()) {
    if (!read.count(decl.name)) out.push_back(decl.name);
  }
  return out;
}

Spec SpecFromJson(const Json& json) {
  if (!json.is_object()) throw ModelError("specification must be an object");
  std::string type = json.value("type", "");
  try {
    if (type == "predicate") {
      SpacePtr space = SpaceFromJson(json.at("space"));
      return Spec::Predicate(*space, json.at("dom").get<std::string>(),
                             json.at("rel").get<std::string>());
    }
    if (type == "enumerated") {
      return Spec::Enumerated(
          RelationFromJson(json.contains("relation") ? json["relation"] : json));
    }
  } catch (const Json::exception& e) {
    throw ModelError(std::string("bad specification: ") + e.what());
  }
  throw ModelError("specification type must be \"predicate\" or "
                   "\"enumerated\"");
}

Json SpecToJson(const Spec& spec) {
  if (spec.kind() == Spec::Kind::kEnumerated) {
    return {{"type", "enumerated"}, {"relation", RelationToJson(spec.relation())}};
  }
  return {{"type", "predicate"},
          {"space", SpaceToJson(spec.space())},
          {"dom", spec.dom_text()},
          {"rel", spec.rel_text()}};
}

}  // namespace relcor
