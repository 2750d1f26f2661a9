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

#include "relcor/relation.h"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "relcor/errors.h"

namespace relcor {

namespace {

void RequireSameSpace(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) {
    throw SpaceMismatchError("operands live on different state spaces");
  }
}

void CheckPairCap(std::uint64_t count, const Limits& limits) {
  if (count > limits.max_pairs) {
    throw CapacityError("relation would exceed " +
                        std::to_string(limits.max_pairs) + " pairs");
  }
}

std::uint64_t SpaceSize(const StateSpace& space, const Limits& limits) {
  return space.CheckedSize(limits.max_pairs);
}

template <typename T>
void SortUnique(std::vector<T>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

bool IsSubset(const Relation& a, const Relation& b) {
  return std::includes(b.pairs().begin(), b.pairs().end(), a.pairs().begin(),
                       a.pairs().end());
}

bool AllDiagonal(const Relation& r) {
  return std::all_of(r.pairs().begin(), r.pairs().end(),
                     [](const Relation::Pair& p) { return p.first == p.second; });
}

}  // namespace

StateSet::StateSet(SpacePtr space, std::vector<StateIndex> members)
    : space_(std::move(space)), members_(std::move(members)) {
  SortUnique(members_);
  if (space_ && space_->size() && !members_.empty() &&
      members_.back() >= *space_->size()) {
    throw ModelError("state index outside the space");
  }
}

bool StateSet::Contains(StateIndex s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool StateSet::IsSubsetOf(const StateSet& other) const {
  RequireSameSpace(space_, other.space_);
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

StateSet StateSet::All(SpacePtr space, const Limits& limits) {
  std::uint64_t n = SpaceSize(*space, limits);
  std::vector<StateIndex> members(n);
  for (std::uint64_t s = 0; s < n; ++s) members[s] = s;
  return StateSet(std::move(space), std::move(members));
}

bool operator==(const StateSet& a, const StateSet& b) {
  RequireSameSpace(a.space_, b.space_);
  return a.members_ == b.members_;
}

Relation::Relation(SpacePtr space, std::vector<Pair> pairs)
    : space_(std::move(space)), pairs_(std::move(pairs)) {
  SortUnique(pairs_);
  if (!pairs_.empty()) {
    if (!space_ || !space_->size()) {
      throw ModelError("relation over a non-enumerable space");
    }
    std::uint64_t n = *space_->size();
    for (const Pair& p : pairs_) {
      if (p.first >= n || p.second >= n) {
        throw ModelError("relation pair outside the space");
      }
    }
  }
}

Relation::Relation(SpacePtr space, std::vector<Pair> pairs, Sorted)
    : space_(std::move(space)), pairs_(std::move(pairs)) {}

Relation FromSortedPairs(SpacePtr space, std::vector<Relation::Pair> pairs) {
  return Relation(std::move(space), std::move(pairs), Relation::Sorted{});
}

bool Relation::Contains(StateIndex from, StateIndex to) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{from, to});
}

std::span<const Relation::Pair> Relation::Images(StateIndex from) const {
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{from, 0});
  auto hi = lo;
  while (hi != pairs_.end() && hi->first == from) ++hi;
  return {lo, hi};
}

bool operator==(const Relation& a, const Relation& b) {
  RequireSameSpace(a.space_, b.space_);
  return a.pairs_ == b.pairs_;
}

Relation Build(SpacePtr space, BuildKind kind, const Limits& limits) {
  std::vector<Relation::Pair> pairs;
  switch (kind) {
    case BuildKind::kEmpty:
      break;
    case BuildKind::kIdentity: {
      std::uint64_t n = SpaceSize(*space, limits);
      CheckPairCap(n, limits);
      pairs.reserve(n);
      for (StateIndex s = 0; s < n; ++s) pairs.emplace_back(s, s);
      break;
    }
    case BuildKind::kUniversal: {
      std::uint64_t n = SpaceSize(*space, limits);
      if (n != 0 && n > limits.max_pairs / n) {
        CheckPairCap(limits.max_pairs + 1, limits);
      }
      pairs.reserve(n * n);
      for (StateIndex s = 0; s < n; ++s) {
        for (StateIndex t = 0; t < n; ++t) pairs.emplace_back(s, t);
      }
      break;
    }
  }
  return FromSortedPairs(std::move(space), std::move(pairs));
}

Relation ApplySetOp(const Relation& r, const Relation& other, SetOp op,
                    const Limits& limits) {
  switch (op) {
    case SetOp::kUnion:
      return Union(r, other);
    case SetOp::kIntersection:
      return Intersection(r, other);
    case SetOp::kDifference:
      return Difference(r, other);
    case SetOp::kComplement:
      return Complement(r, limits);
  }
  throw ModelError("unknown set operation");
}

Relation Union(const Relation& a, const Relation& b) {
  RequireSameSpace(a.space_ptr(), b.space_ptr());
  std::vector<Relation::Pair> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                 b.pairs().end(), std::back_inserter(out));
  return FromSortedPairs(a.space_ptr(), std::move(out));
}

Relation Intersection(const Relation& a, const Relation& b) {
  RequireSameSpace(a.space_ptr(), b.space_ptr());
  std::vector<Relation::Pair> out;
  std::set_intersection(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                        b.pairs().end(), std::back_inserter(out));
  return FromSortedPairs(a.space_ptr(), std::move(out));
}

Relation Difference(const Relation& a, const Relation& b) {
  RequireSameSpace(a.space_ptr(), b.space_ptr());
  std::vector<Relation::Pair> out;
  std::set_difference(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                      b.pairs().end(), std::back_inserter(out));
  return FromSortedPairs(a.space_ptr(), std::move(out));
}

Relation Complement(const Relation& r, const Limits& limits) {
  return Difference(Build(r.space_ptr(), BuildKind::kUniversal, limits), r);
}

Relation Compose(const Relation& a, const Relation& b, const Limits& limits) {
  RequireSameSpace(a.space_ptr(), b.space_ptr());
  std::vector<Relation::Pair> out;
  for (const auto& [from, mid] : a.pairs()) {
    for (const auto& [unused, to] : b.Images(mid)) {
      out.emplace_back(from, to);
    }
    CheckPairCap(out.size(), limits);
  }
  SortUnique(out);
  return FromSortedPairs(a.space_ptr(), std::move(out));
}

Relation Converse(const Relation& r) {
  std::vector<Relation::Pair> out;
  out.reserve(r.size());
  for (const auto& [from, to] : r.pairs()) out.emplace_back(to, from);
  std::sort(out.begin(), out.end());
  return FromSortedPairs(r.space_ptr(), std::move(out));
}

Relation Closure(const Relation& r, const Limits& limits) {
  std::uint64_t n = SpaceSize(r.space(), limits);
  std::vector<Relation::Pair> out;
  std::vector<std::uint64_t> seen(n, UINT64_MAX);
  std::vector<StateIndex> reached;
  for (StateIndex source = 0; source < n; ++source) {
    reached.clear();
    reached.push_back(source);
    seen[source] = source;
    for (std::size_t head = 0; head < reached.size(); ++head) {
      for (const auto& [unused, next] : r.Images(reached[head])) {
        if (seen[next] != source) {
          seen[next] = source;
          reached.push_back(next);
        }
      }
    }
    std::sort(reached.begin(), reached.end());
    for (StateIndex t : reached) out.emplace_back(source, t);
    CheckPairCap(out.size(), limits);
  }
  return FromSortedPairs(r.space_ptr(), std::move(out));
}

StateSet Domain(const Relation& r) {
  std::vector<StateIndex> members;
  for (const auto& [from, unused] : r.pairs()) {
    if (members.empty() || members.back() != from) members.push_back(from);
  }
  return StateSet(r.space_ptr(), std::move(members));
}

StateSet Range(const Relation& r) {
  std::vector<StateIndex> members;
  members.reserve(r.size());
  for (const auto& [unused, to] : r.pairs()) members.push_back(to);
  return StateSet(r.space_ptr(), std::move(members));
}

Relation RestrictDomain(const Relation& r, const StateSet& set) {
  RequireSameSpace(r.space_ptr(), set.space_ptr());
  std::vector<Relation::Pair> out;
  for (const Relation::Pair& p : r.pairs()) {
    if (set.Contains(p.first)) out.push_back(p);
  }
  return FromSortedPairs(r.space_ptr(), std::move(out));
}

Relation RestrictRange(const Relation& r, const StateSet& set) {
  RequireSameSpace(r.space_ptr(), set.space_ptr());
  std::vector<Relation::Pair> out;
  for (const Relation::Pair& p : r.pairs()) {
    if (set.Contains(p.second)) out.push_back(p);
  }
  return FromSortedPairs(r.space_ptr(), std::move(out));
}

Relation Vector(const StateSet& set, const Limits& limits) {
  std::uint64_t n = SpaceSize(set.space(), limits);
  CheckPairCap(static_cast<std::uint64_t>(set.size()) * n, limits);
  std::vector<Relation::Pair> out;
  for (StateIndex s : set.members()) {
    for (StateIndex t = 0; t < n; ++t) out.emplace_back(s, t);
  }
  return FromSortedPairs(set.space_ptr(), std::move(out));
}

StateSet SetUnion(const StateSet& a, const StateSet& b) {
  RequireSameSpace(a.space_ptr(), b.space_ptr());
  std::vector<StateIndex> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                 b.members().end(), std::back_inserter(out));
  return StateSet(a.space_ptr(), std::move(out));
}

StateSet SetIntersection(const StateSet& a, const StateSet& b) {
  RequireSameSpace(a.space_ptr(), b.space_ptr());
  std::vector<StateIndex> out;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return StateSet(a.space_ptr(), std::move(out));
}

StateSet SetDifference(const StateSet& a, const StateSet& b) {
  RequireSameSpace(a.space_ptr(), b.space_ptr());
  std::vector<StateIndex> out;
  std::set_difference(a.members().begin(), a.members().end(),
                      b.members().begin(), b.members().end(),
                      std::back_inserter(out));
  return StateSet(a.space_ptr(), std::move(out));
}

RelationFlags Predicates(const Relation& r, const Limits& limits) {
  const Relation identity =
      Build(r.space_ptr(), BuildKind::kIdentity, limits);
  const Relation converse = Converse(r);
  const Relation meet = Intersection(r, converse);
  RelationFlags flags;
  flags.reflexive = IsSubset(identity, r);
  flags.symmetric = r == converse;
  flags.antisymmetric = AllDiagonal(meet);
  flags.asymmetric = meet.empty();
  flags.transitive = IsSubset(Compose(r, r, limits), r);
  flags.total = IsSubset(identity, Compose(r, converse, limits));
  flags.deterministic = AllDiagonal(Compose(converse, r, limits));
  return flags;
}

bool IsDeterministic(const Relation& r) {
  const auto pairs = r.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) return false;
  }
  return true;
}

bool Refines(const Relation& refined, const Relation& spec) {
  RequireSameSpace(refined.space_ptr(), spec.space_ptr());
  StateSet common = SetIntersection(Domain(spec), Domain(refined));
  return RestrictDomain(Union(spec, refined), common) == spec;
}

StateSet CompetenceDomain(const Relation& spec, const Relation& program) {
  return Domain(Intersection(spec, program));
}

bool IsCorrect(const Relation& program, const Relation& spec) {
  RequireSameSpace(program.space_ptr(), spec.space_ptr());
  if (!IsDeterministic(program)) {
    throw NondeterminismError(
        "correctness via competence domains requires a deterministic "
        "program");
  }
  return CompetenceDomain(spec, program) == Domain(spec);
}

bool MoreCorrect(const Relation& candidate, const Relation& base,
                 const Relation& spec, bool strict) {
  RequireSameSpace(candidate.space_ptr(), spec.space_ptr());
  RequireSameSpace(base.space_ptr(), spec.space_ptr());
  if (!IsDeterministic(candidate) || !IsDeterministic(base)) {
    throw NondeterminismError(
        "relative correctness is only defined here for deterministic "
        "programs");
  }
  StateSet cd_candidate = CompetenceDomain(spec, candidate);
  StateSet cd_base = CompetenceDomain(spec, base);
  if (!cd_base.IsSubsetOf(cd_candidate)) return false;
  return !strict || cd_candidate.size() > cd_base.size();
}

std::vector<std::size_t> CorrectnessOrder::Minimal() const {
  std::vector<bool> has_lower(groups.size(), false);
  for (const auto& [lower, upper] : covers) has_lower[upper] = true;
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (!has_lower[g]) out.push_back(g);
  }
  return out;
}

std::vector<std::size_t> CorrectnessOrder::Maximal() const {
  std::vector<bool> has_upper(groups.size(), false);
  for (const auto& [lower, upper] : covers) has_upper[lower] = true;
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (!has_upper[g]) out.push_back(g);
  }
  return out;
}

std::size_t CorrectnessOrder::GroupOf(std::size_t program) const {
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& m = groups[g].members;
    if (std::find(m.begin(), m.end(), program) != m.end()) return g;
  }
  throw ModelError("program index not in order");
}

CorrectnessOrder OrderByCorrectness(std::span<const Relation> programs,
                                    const Relation& spec) {
  CorrectnessOrder order;
  const StateSet spec_domain = Domain(spec);
  for (std::size_t i = 0; i < programs.size(); ++i) {
    // Rejects non-deterministic inputs and mismatched spaces.
    MoreCorrect(programs[i], programs[i], spec, false);
    StateSet cd = CompetenceDomain(spec, programs[i]);
    auto same = std::find_if(
        order.groups.begin(), order.groups.end(),
        [&](const CorrectnessOrder::Group& g) {
          return g.competence_domain == cd;
        });
    if (same != order.groups.end()) {
      same->members.push_back(i);
    } else {
      bool correct = cd == spec_domain;
      order.groups.push_back({{i}, std::move(cd), correct});
    }
  }
  const std::size_t n = order.groups.size();
  auto below = [&](std::size_t a, std::size_t b) {
    const StateSet& x = order.groups[a].competence_domain;
    const StateSet& y = order.groups[b].competence_domain;
    return x.size() < y.size() && x.IsSubsetOf(y);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (below(a, k) && below(k, b)) covered = false;
      }
      if (covered) order.covers.emplace_back(a, b);
    }
  }
  return order;
}

std::string CorrectnessOrderToDot(const CorrectnessOrder& order,
                                  std::span<const std::string> names) {
  std::ostringstream out;
  out << "digraph correctness_order {\n  rankdir=BT;\n";
  for (std::size_t g = 0; g < order.groups.size(); ++g) {
    out << "  g" << g << " [label=\"";
    const auto& members = order.groups[g].members;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) out << ", ";
      std::size_t i = members[k];
      out << (i < names.size() ? names[i] : "P" + std::to_string(i));
    }
    out << "\"";
    if (order.groups[g].correct) out << ", style=filled, fillcolor=palegreen";
    out << "];\n";
  }
  for (const auto& [lower, upper] : order.covers) {
    out << "  g" << lower << " -> g" << upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace relcor
