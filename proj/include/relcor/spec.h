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


// Specifications: an explicit relation, or a pair of predicates (a domain
// predicate over the input state and a relation predicate that may also
// read the output state through primed names).

#ifndef RELCOR_SPEC_H
#define RELCOR_SPEC_H

#include <memory>
#include <string>
#include <vector>

#include "relcor/ast.h"
#include "relcor/interpreter.h"
#include "relcor/relation.h"
#include "relcor/relation_json.h"

namespace relcor {

namespace internal {
struct LCond;
}

struct OracleVerdict {
  bool passed = false;
  bool vacuous = false;  // input outside the specification's domain

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

class Spec {
 public:
  enum class Kind { kEnumerated, kPredicate };

  static Spec Enumerated(Relation relation);
  // Throws ParseError when either predicate does not parse against `space`.
  static Spec Predicate(StateSpace space, const std::string& dom,
                        const std::string& rel);

  Kind kind() const { return kind_; }
  const StateSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  // kEnumerated only.
  const Relation& relation() const { return relation_; }
  // kPredicate only: the source text of the two predicates.
  const std::string& dom_text() const { return dom_text_; }
  const std::string& rel_text() const { return rel_text_; }

  // Whether the input lies in dom(R). A predicate that cannot be evaluated
  // at `input` counts as false (reported on stderr when RELCOR_VERBOSE is
  // set).
  bool InDom(const State& input) const;
  // Whether (input, output) satisfies the relation part. The output may lie
  // outside the declared intervals (machine-mode results); an enumerated
  // specification never contains such a pair.
  bool Holds(const State& input, const State& output) const;

  OracleVerdict AbsOracle(const State& input, const ExecOutcome& outcome) const;

  // {(s, s') | s in dom and (s, s') satisfies the relation part}.
  Relation Enumerate(const Limits& limits = {}) const;

  // Variables the domain and relation predicates never read in the input
  // state. Empty for enumerated specifications.
  std::vector<std::string> UnconstrainedVars() const;

 private:
  Spec() = default;

  Kind kind_ = Kind::kEnumerated;
  SpacePtr space_;
  Relation relation_;
  std::string dom_text_;
  std::string rel_text_;
  CondPtr dom_;
  CondPtr rel_;
  std::shared_ptr<const internal::LCond> lowered_dom_;
  std::shared_ptr<const internal::LCond> lowered_rel_;
};

// {"type": "predicate", "space": {...}, "dom": "...", "rel": "..."} or
// {"type": "enumerated", "relation": {...}} (the relation literal may also
// be inlined). Throws ModelError or ParseError.
Spec SpecFromJson(const Json& json);
Json SpecToJson(const Spec& spec);

}  // namespace relcor

#endif  // RELCOR_SPEC_H
