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

// Exact calculus of finite binary relations over a StateSpace.
//
// Relations are explicit sets of (StateIndex, StateIndex) pairs kept sorted,
// so equality is extensional and iteration order is canonical. All values
// are immutable once built.

#ifndef RELCOR_RELATION_H
#define RELCOR_RELATION_H

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relcor/state_space.h"

namespace relcor {

class StateSet {
 public:
  StateSet() = default;
  // `members` need not be sorted; duplicates are removed.
  StateSet(SpacePtr space, std::vector<StateIndex> members);

  const StateSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::span<const StateIndex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(StateIndex s) const;
  bool IsSubsetOf(const StateSet& other) const;

  static StateSet All(SpacePtr space, const Limits& limits = {});

  friend bool operator==(const StateSet& a, const StateSet& b);

 private:
  SpacePtr space_;
  std::vector<StateIndex> members_;
};

class Relation {
 public:
  using Pair = std::pair<StateIndex, StateIndex>;

  Relation() = default;
  // `pairs` need not be sorted; duplicates are removed. Throws ModelError
  // when an index lies outside the space.
  Relation(SpacePtr space, std::vector<Pair> pairs);

  const StateSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::span<const Pair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool Contains(StateIndex from, StateIndex to) const;
  // All pairs whose first component is `from`.
  std::span<const Pair> Images(StateIndex from) const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  struct Sorted {};
  Relation(SpacePtr space, std::vector<Pair> pairs, Sorted);
  friend Relation FromSortedPairs(SpacePtr space, std::vector<Pair> pairs);

  SpacePtr space_;
  std::vector<Pair> pairs_;
};

// Builds a relation from pairs already sorted and unique (no validation).
Relation FromSortedPairs(SpacePtr space, std::vector<Relation::Pair> pairs);

enum class BuildKind { kEmpty, kIdentity, kUniversal };
enum class SetOp { kUnion, kIntersection, kDifference, kComplement };

Relation Build(SpacePtr space, BuildKind kind, const Limits& limits = {});
// `other` is ignored for kComplement.
Relation ApplySetOp(const Relation& r, const Relation& other, SetOp op,
                    const Limits& limits = {});

Relation Union(const Relation& a, const Relation& b);
Relation Intersection(const Relation& a, const Relation& b);
Relation Difference(const Relation& a, const Relation& b);
Relation Complement(const Relation& r, const Limits& limits = {});
Relation Compose(const Relation& a, const Relation& b,
                 const Limits& limits = {});
Relation Converse(const Relation& r);
// Reflexive transitive closure: the least relation containing I and R that
// is closed under composition.
Relation Closure(const Relation& r, const Limits& limits = {});

StateSet Domain(const Relation& r);
StateSet Range(const Relation& r);
// (A x S) ∩ R: keeps pairs whose source lies in `set`.
Relation RestrictDomain(const Relation& r, const StateSet& set);
// R ∩ (S x B): keeps pairs whose target lies in `set`.
Relation RestrictRange(const Relation& r, const StateSet& set);
// A x S, the relational form of a set (so Domain(R) x S == R∘L).
Relation Vector(const StateSet& set, const Limits& limits = {});

StateSet SetUnion(const StateSet& a, const StateSet& b);
StateSet SetIntersection(const StateSet& a, const StateSet& b);
StateSet SetDifference(const StateSet& a, const StateSet& b);

struct RelationFlags {
  bool reflexive = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool asymmetric = false;
  bool transitive = false;
  bool total = false;
  bool deterministic = false;

  friend bool operator==(const RelationFlags&, const RelationFlags&) = default;
};

// Each flag is evaluated by its relational definition (I ⊆ R, R = R^,
// R ∩ R^ ⊆ I, R ∩ R^ = ∅, RR ⊆ R, I ⊆ RR^, R^R ⊆ I).
RelationFlags Predicates(const Relation& r, const Limits& limits = {});

// Direct scan: at most one image per state.
bool IsDeterministic(const Relation& r);

// Rp refines R: RL ∩ RpL ∩ (R ∪ Rp) = R.
bool Refines(const Relation& refined, const Relation& spec);

// dom(R ∩ P): the states on which `program` satisfies `spec`.
StateSet CompetenceDomain(const Relation& spec, const Relation& program);

// (R ∩ P)L = RL. Requires a deterministic program.
bool IsCorrect(const Relation& program, const Relation& spec);

// CD(candidate) ⊇ CD(base), or ⊃ when `strict`. Both programs must be
// deterministic; otherwise NondeterminismError.
bool MoreCorrect(const Relation& candidate, const Relation& base,
                 const Relation& spec, bool strict);

// Programs grouped by equal competence domain, with Hasse-reduced edges of
// the strict relative-correctness order between groups.
struct CorrectnessOrder {
  struct Group {
    std::vector<std::size_t> members;  // indices into the input list
    StateSet competence_domain;
    bool correct = false;
  };
  std::vector<Group> groups;
  // (lower group, upper group): upper covers lower.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::vector<std::size_t> Minimal() const;
  std::vector<std::size_t> Maximal() const;
  std::size_t GroupOf(std::size_t program) const;
};

CorrectnessOrder OrderByCorrectness(std::span<const Relation> programs,
                                    const Relation& spec);

// DOT rendering of a correctness order; `names` label the programs.
std::string CorrectnessOrderToDot(const CorrectnessOrder& order,
                                  std::span<const std::string> names);

}  // namespace relcor

#endif  // RELCOR_RELATION_H
