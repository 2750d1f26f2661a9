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

// Fuel-bounded operational semantics.
//
// Exact mode confines every assigned value to the target's declared
// interval (an out-of-interval result is undefined, like division by zero
// or an out-of-bounds index). Machine mode drops the interval check and
// computes with 64-bit integers; overflow is undefined. Division truncates
// toward zero and `%` takes the sign of the dividend in both modes.

#ifndef RELCOR_INTERPRETER_H
#define RELCOR_INTERPRETER_H

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "relcor/ast.h"
#include "relcor/state_space.h"

namespace relcor {

enum class EvalMode { kExact, kMachine };

struct ExecOutcome {
  enum class Kind { kFinal, kNonTermination, kUndefined };

  Kind kind = Kind::kUndefined;
  State final_state;  // kFinal only
  std::string site;   // kUndefined: where evaluation failed

  bool is_final() const { return kind == Kind::kFinal; }

  static ExecOutcome Final(State state) {
    return {Kind::kFinal, std::move(state), {}};
  }
  static ExecOutcome NonTermination() { return {Kind::kNonTermination, {}, {}}; }
  static ExecOutcome Undefined(std::string site) {
    return {Kind::kUndefined, {}, std::move(site)};
  }
};

const char* ToString(ExecOutcome::Kind kind);

namespace internal {
struct LoweredProgram;
}

// A program resolved to slot offsets, ready for repeated execution.
class Executable {
 public:
  explicit Executable(const Program& program);
  ~Executable();
  Executable(Executable&&) noexcept;
  Executable& operator=(Executable&&) noexcept;

  const StateSpace& space() const;

  // Each loop-body iteration consumes one unit of fuel; running
  // out yields NonTermination. Local variables start at the value of their
  // domain closest to zero.
  ExecOutcome Run(const State& input, std::uint64_t fuel,
                  EvalMode mode = EvalMode::kExact) const;

  const internal::LoweredProgram& lowered() const { return *lowered_; }

 private:
  std::unique_ptr<internal::LoweredProgram> lowered_;
};

ExecOutcome Execute(const Program& program, const State& input,
                    std::uint64_t fuel, EvalMode mode = EvalMode::kExact);

// Runs `program` in machine mode on every input and keeps the inputs that
// reach a final state.
std::map<State, State> ExecModeFunction(const Program& program,
                                        std::span<const State> inputs,
                                        std::uint64_t fuel);

// 10 * (size of the widest declared interval)^2, saturating.
std::uint64_t DefaultExactFuel(const StateSpace& space);

}  // namespace relcor

#endif  // RELCOR_INTERPRETER_H
