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

#include "relcor/state_space.h"

#include <set>
#include <sstream>

#include "relcor/errors.h"

namespace relcor {

std::uint64_t VarDecl::value_count() const {
  // max >= min is validated by StateSpace; the difference fits in uint64.
  return static_cast<std::uint64_t>(max) - static_cast<std::uint64_t>(min) + 1;
}

StateSpace::StateSpace(std::vector<VarDecl> vars) : vars_(std::move(vars)) {
  std::set<std::string> names;
  for (const VarDecl& decl : vars_) {
    if (decl.name.empty()) {
      throw ModelError("state variable with empty name");
    }
    if (!names.insert(decl.name).second) {
      throw ModelError("duplicate state variable '" + decl.name + "'");
    }
    if (decl.max < decl.min) {
      throw ModelError("empty interval for variable '" + decl.name + "'");
    }
    if (!decl.labels.empty() &&
        decl.labels.size() != decl.value_count()) {
      throw ModelError("label count does not match interval of '" +
                       decl.name + "'");
    }
    offsets_.push_back(slot_count_);
    for (std::size_t k = 0; k < decl.width(); ++k) {
      slot_min_.push_back(decl.min);
      std::uint64_t radix = decl.value_count();
      slot_radix_.push_back(radix);
      if (size_) {
        // radix == 0 means 2^64 values.
        if (radix == 0 || *size_ > UINT64_MAX / radix) {
          size_.reset();
        } else {
          *size_ *= radix;
        }
      }
    }
    slot_count_ += decl.width();
  }
  slot_stride_.assign(slot_count_, 0);
  if (size_) {
    std::uint64_t stride = 1;
    for (std::size_t k = slot_count_; k-- > 0;) {
      slot_stride_[k] = stride;
      stride *= slot_radix_[k];
    }
  }
}

std::optional<std::size_t> StateSpace::Find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::uint64_t StateSpace::CheckedSize(std::uint64_t cap) const {
  if (!size_ || *size_ > cap) {
    throw CapacityError("state space has more than " + std::to_string(cap) +
                        " states");
  }
  return *size_;
}

bool StateSpace::Contains(const State& state) const {
  if (state.slots.size() != slot_count_) return false;
  for (std::size_t k = 0; k < slot_count_; ++k) {
    std::int64_t v = state.slots[k];
    if (v < slot_min_[k]) return false;
    std::uint64_t delta = static_cast<std::uint64_t>(v) -
                          static_cast<std::uint64_t>(slot_min_[k]);
    if (slot_radix_[k] != 0 && delta >= slot_radix_[k]) return false;
  }
  return true;
}

StateIndex StateSpace::IndexOf(const State& state) const {
  if (!Contains(state)) {
    throw ModelError("state " + Format(state) + " is outside the space");
  }
  return IndexOf(std::span<const std::int64_t>(state.slots));
}

StateIndex StateSpace::IndexOf(std::span<const std::int64_t> slots) const {
  if (!size_) throw CapacityError("state space is not enumerable");
  StateIndex index = 0;
  for (std::size_t k = 0; k < slot_count_; ++k) {
    index += (static_cast<std::uint64_t>(slots[k]) -
              static_cast<std::uint64_t>(slot_min_[k])) *
             slot_stride_[k];
  }
  return index;
}

State StateSpace::StateAt(StateIndex index) const {
  State state;
  state.slots.resize(slot_count_);
  DecodeInto(index, state.slots);
  return state;
}

void StateSpace::DecodeInto(StateIndex index,
                            std::span<std::int64_t> slots) const {
  if (!size_ || index >= *size_) {
    throw ModelError("state index out of range");
  }
  for (std::size_t k = 0; k < slot_count_; ++k) {
    std::uint64_t digit = index / slot_stride_[k];
    index %= slot_stride_[k];
    slots[k] = static_cast<std::int64_t>(
        static_cast<std::uint64_t>(slot_min_[k]) + digit);
  }
}

StateSpace StateSpace::With(VarDecl decl) const {
  std::vector<VarDecl> vars = vars_;
  vars.push_back(std::move(decl));
  return StateSpace(std::move(vars));
}

State StateSpace::ZeroState() const {
  State state;
  for (const VarDecl& decl : vars_) {
    for (std::size_t k = 0; k < decl.width(); ++k) {
      state.slots.push_back(ClampToDomain(decl, 0));
    }
  }
  return state;
}

std::string StateSpace::FormatValue(std::size_t var,
                                    std::int64_t value) const {
  const VarDecl& decl = vars_[var];
  if (!decl.labels.empty() && value >= decl.min && value <= decl.max) {
    return decl.labels[static_cast<std::size_t>(value - decl.min)];
  }
  return std::to_string(value);
}

std::string StateSpace::Format(const State& state) const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i > 0) out << ", ";
    const VarDecl& decl = vars_[i];
    out << decl.name << "=";
    if (decl.is_array()) out << "[";
    for (std::size_t k = 0; k < decl.width(); ++k) {
      std::size_t slot = offsets_[i] + k;
      if (k > 0) out << ",";
      if (slot < state.slots.size()) {
        out << FormatValue(i, state.slots[slot]);
      } else {
        out << "?";
      }
    }
    if (decl.is_array()) out << "]";
  }
  out << "}";
  return out.str();
}

bool Compatible(const StateSpace& a, const StateSpace& b) {
  if (a.vars().size() != b.vars().size()) return false;
  for (std::size_t i = 0; i < a.vars().size(); ++i) {
    if (a.vars()[i].name != b.vars()[i].name ||
        a.vars()[i].length != b.vars()[i].length) {
      return false;
    }
  }
  return true;
}

std::int64_t ClampToDomain(const VarDecl& decl, std::int64_t value) {
  if (value < decl.min) return decl.min;
  if (value > decl.max) return decl.max;
  return value;
}

}  // namespace relcor
