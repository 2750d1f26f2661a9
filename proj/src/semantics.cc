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

#include "relcor/semantics.h"

#include "lowered.h"
#include "relcor/errors.h"

namespace relcor {

namespace {

using internal::LStmt;
using internal::Truth;

class Denoter {
 public:
  explicit Denoter(const Limits& limits) : limits_(limits) {}

  Relation Run(const LStmt& s, const SpacePtr& frame) {
    switch (s.kind) {
      case Stmt::Kind::kAbort:
        return Build(frame, BuildKind::kEmpty, limits_);
      case Stmt::Kind::kSkip:
        return Build(frame, BuildKind::kIdentity, limits_);
      case Stmt::Kind::kAssign:
        return AssignRelation(s, frame);
      case Stmt::Kind::kSeq:
        return Compose(Run(*s.first, frame), Run(*s.second, frame), limits_);
      case Stmt::Kind::kIf: {
        auto [when_true, when_false] = Partition(s, frame);
        return Union(RestrictDomain(Run(*s.first, frame), when_true),
                     RestrictDomain(Build(frame, BuildKind::kIdentity, limits_),
                                    when_false));
      }
      case Stmt::Kind::kIfElse: {
        auto [when_true, when_false] = Partition(s, frame);
        return Union(RestrictDomain(Run(*s.first, frame), when_true),
                     RestrictDomain(Run(*s.second, frame), when_false));
      }
      case Stmt::Kind::kWhile: {
        auto [when_true, when_false] = Partition(s, frame);
        Relation step = RestrictDomain(Run(*s.first, frame), when_true);
        return RestrictRange(Closure(step, limits_), when_false);
      }
      case Stmt::Kind::kBlock: {
        auto inner = std::make_shared<const StateSpace>(frame->With(s.local));
        inner->CheckedSize(limits_.max_pairs);
        Relation body = Run(*s.first, inner);
        // The local is the least significant variable of the inner frame.
        StateIndex local_count = *inner->size() / *frame->size();
        std::vector<Relation::Pair> projected;
        projected.reserve(body.size());
        for (const auto& [from, to] : body.pairs()) {
          projected.emplace_back(from / local_count, to / local_count);
        }
        return Relation(frame, std::move(projected));
      }
    }
    throw ModelError("unknown statement kind");
  }

 private:
  Relation AssignRelation(const LStmt& s, const SpacePtr& frame) {
    StateIndex count = frame->CheckedSize(limits_.max_pairs);
    std::vector<std::int64_t> slots(frame->slot_count());
    std::vector<Relation::Pair> pairs;
    pairs.reserve(count);
    for (StateIndex from = 0; from < count; ++from) {
      frame->DecodeInto(from, slots);
      internal::ExecState state;
      state.slots = slots;
      state.mode = EvalMode::kExact;
      if (internal::Exec(s, state) != internal::Status::kOk) continue;
      pairs.emplace_back(from, frame->IndexOf(state.slots));
    }
    return FromSortedPairs(frame, std::move(pairs));
  }

  std::pair<StateSet, StateSet> Partition(const LStmt& s,
                                          const SpacePtr& frame) {
    StateIndex count = frame->CheckedSize(limits_.max_pairs);
    std::vector<std::int64_t> slots(frame->slot_count());
    std::vector<StateIndex> when_true;
    std::vector<StateIndex> when_false;
    for (StateIndex index = 0; index < count; ++index) {
      frame->DecodeInto(index, slots);
      // States where the guard is undefined belong to neither side.
      switch (internal::Eval(*s.cond, {slots.data(), nullptr})) {
        case Truth::kTrue:
          when_true.push_back(index);
          break;
        case Truth::kFalse:
          when_false.push_back(index);
          break;
        case Truth::kUndefined:
          break;
      }
    }
    return {StateSet(frame, std::move(when_true)),
            StateSet(frame, std::move(when_false))};
  }

  const Limits& limits_;
};

}  // namespace

Relation Denote(const Program& program, const Limits& limits) {
  internal::LoweredProgram lowered = internal::Lower(program);
  auto space = std::make_shared<const StateSpace>(program.space);
  space->CheckedSize(limits.max_pairs);
  return Denoter(limits).Run(*lowered.body, space);
}

}  // namespace relcor
