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

#ifndef RELCOR_STATE_SPACE_H
#define RELCOR_STATE_SPACE_H

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relcor {

// Position of a state in the canonical (lexicographic) enumeration of a
// space. The first declared variable is the most significant digit.
using StateIndex = std::uint64_t;

// Guards every enumeration of states or state pairs.
struct Limits {
  std::uint64_t max_pairs = 10'000'000;
};

// A variable of the state space: a scalar over [min, max], or a fixed-size
// array whose elements each range over [min, max].
struct VarDecl {
  std::string name;
  std::int64_t min = 0;
  std::int64_t max = 0;
  // Zero for scalars, element count for arrays.
  std::size_t length = 0;
  // Optional display names for the values min..max (e.g. states a..e).
  std::vector<std::string> labels;

  bool is_array() const { return length > 0; }
  std::size_t width() const { return is_array() ? length : 1; }
  std::uint64_t value_count() const;

  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

// Flat slot vector: scalars take one slot, arrays one slot per element, in
// declaration order.
struct State {
  std::vector<std::int64_t> slots;

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;
};

class StateSpace {
 public:
  StateSpace() = default;
  // Throws ModelError on duplicate names or empty intervals.
  explicit StateSpace(std::vector<VarDecl> vars);

  const std::vector<VarDecl>& vars() const { return vars_; }
  std::optional<std::size_t> Find(std::string_view name) const;
  std::size_t offset(std::size_t var) const { return offsets_[var]; }
  std::size_t slot_count() const { return slot_count_; }

  // Number of states; nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const { return size_; }
  // Number of states, throwing CapacityError above `cap`.
  std::uint64_t CheckedSize(std::uint64_t cap) const;

  bool Contains(const State& state) const;
  StateIndex IndexOf(const State& state) const;
  StateIndex IndexOf(std::span<const std::int64_t> slots) const;
  State StateAt(StateIndex index) const;
  void DecodeInto(StateIndex index, std::span<std::int64_t> slots) const;

  // This space with `decl` appended as the least significant variable.
  StateSpace With(VarDecl decl) const;

  // The state whose every slot is the value closest to zero in its domain.
  State ZeroState() const;

  std::string Format(const State& state) const;
  std::string FormatValue(std::size_t var, std::int64_t value) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.vars_ == b.vars_;
  }

 private:
  std::vector<VarDecl> vars_;
  std::vector<std::size_t> offsets_;
  // Per-slot radix and stride; only meaningful when size_ is set.
  std::vector<std::int64_t> slot_min_;
  std::vector<std::uint64_t> slot_radix_;
  std::vector<std::uint64_t> slot_stride_;
  std::size_t slot_count_ = 0;
  std::optional<std::uint64_t> size_ = 1;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

inline SpacePtr MakeSpace(std::vector<VarDecl> vars) {
  return std::make_shared<const StateSpace>(std::move(vars));
}

// Compatible spaces have the same variable names and shapes; intervals may
// differ. States of one can be read in the other.
bool Compatible(const StateSpace& a, const StateSpace& b);

std::int64_t ClampToDomain(const VarDecl& decl, std::int64_t value);

}  // namespace relcor

#endif  // RELCOR_STATE_SPACE_H
