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

#include "relcor/interpreter.h"

#include <algorithm>

#include "lowered.h"
#include "relcor/errors.h"

namespace relcor {

const char* ToString(ExecOutcome::Kind kind) {
  switch (kind) {
    case ExecOutcome::Kind::kFinal:
      return "final";
    case ExecOutcome::Kind::kNonTermination:
      return "nontermination";
    case ExecOutcome::Kind::kUndefined:
      return "undefined";
  }
  return "?";
}

Executable::Executable(const Program& program)
    : lowered_(std::make_unique<internal::LoweredProgram>(
          internal::Lower(program))) {}

Executable::~Executable() = default;
Executable::Executable(Executable&&) noexcept = default;
Executable& Executable::operator=(Executable&&) noexcept = default;

const StateSpace& Executable::space() const { return lowered_->space; }

ExecOutcome Executable::Run(const State& input, std::uint64_t fuel,
                            EvalMode mode) const {
  const StateSpace& space = lowered_->space;
  if (input.slots.size() != space.slot_count()) {
    throw ModelError("input state does not match the program's space");
  }
  if (mode == EvalMode::kExact && !space.Contains(input)) {
    throw ModelError("input state " + space.Format(input) +
                     " lies outside the program's space");
  }
  internal::ExecState state;
  state.slots = input.slots;
  state.slots.resize(lowered_->frame_slots, 0);
  state.fuel = fuel;
  state.mode = mode;
  switch (internal::Exec(*lowered_->body, state)) {
    case internal::Status::kOk:
      state.slots.resize(space.slot_count());
      return ExecOutcome::Final(State{std::move(state.slots)});
    case internal::Status::kNonTermination:
      return ExecOutcome::NonTermination();
    case internal::Status::kUndefined:
      return ExecOutcome::Undefined(internal::DescribeSite(state.failure));
  }
  return ExecOutcome::Undefined("unknown");
}

ExecOutcome Execute(const Program& program, const State& input,
                    std::uint64_t fuel, EvalMode mode) {
  return Executable(program).Run(input, fuel, mode);
}

std::map<State, State> ExecModeFunction(const Program& program,
                                        std::span<const State> inputs,
                                        std::uint64_t fuel) {
  Executable exe(program);
  std::map<State, State> out;
  for (const State& input : inputs) {
    ExecOutcome outcome = exe.Run(input, fuel, EvalMode::kMachine);
    if (outcome.is_final()) out.emplace(input, std::move(outcome.final_state));
  }
  return out;
}

std::uint64_t DefaultExactFuel(const StateSpace& space) {
  std::uint64_t widest = 1;
  for (const VarDecl& decl : space.vars()) {
    std::uint64_t n = decl.value_count();
    if (n == 0) n = UINT64_MAX;  // full 64-bit interval
    widest = std::max(widest, n);
  }
  constexpr std::uint64_t kCap = 1'000'000'000'000ULL;
  if (widest > 316'227) return kCap;  // 10 * widest^2 would exceed the cap
  return std::min<std::uint64_t>(kCap, 10 * widest * widest);
}

}  // namespace relcor
