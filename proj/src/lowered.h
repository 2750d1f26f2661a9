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

// Slot-resolved program form. Variable references become offsets into a
// frame: the state-space slots followed by the slots of the block locals in
// scope, in nesting order.

#ifndef RELCOR_SRC_LOWERED_H
#define RELCOR_SRC_LOWERED_H

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relcor/ast.h"
#include "relcor/interpreter.h"

namespace relcor::internal {

struct LExpr {
  Expr::Kind kind = Expr::Kind::kLiteral;
  ArithOp op = ArithOp::kAdd;
  std::int64_t value = 0;
  std::uint32_t slot = 0;
  std::uint32_t length = 0;
  bool primed = false;
  std::unique_ptr<LExpr> lhs;
  std::unique_ptr<LExpr> rhs;
};

struct LCond {
  Cond::Kind kind = Cond::Kind::kBool;
  bool value = false;
  CmpOp cmp = CmpOp::kEq;
  std::unique_ptr<LExpr> lhs;
  std::unique_ptr<LExpr> rhs;
  std::unique_ptr<LCond> left;
  std::unique_ptr<LCond> right;
};

struct LStmt {
  Stmt::Kind kind = Stmt::Kind::kSkip;
  const Stmt* source = nullptr;
  // kAssign: target slot (first element for arrays) and interval.
  std::uint32_t slot = 0;
  std::uint32_t length = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::unique_ptr<LExpr> index;
  std::unique_ptr<LExpr> value;
  std::unique_ptr<LCond> cond;
  std::unique_ptr<LStmt> first;
  std::unique_ptr<LStmt> second;
  // kBlock: the local and its first slot.
  VarDecl local;
  std::uint32_t local_slot = 0;
};

struct LoweredProgram {
  StateSpace space;
  std::unique_ptr<LStmt> body;
  std::size_t frame_slots = 0;  // space slots plus deepest local nesting
};

LoweredProgram Lower(const Program& program);
// Resolves a predicate against `space`; primed references read the output
// frame.
std::unique_ptr<LCond> LowerCond(const Cond& cond, const StateSpace& space);
std::unique_ptr<LExpr> LowerExpr(const Expr& expr, const StateSpace& space);

enum class Truth { kFalse, kTrue, kUndefined };

struct EvalFrames {
  const std::int64_t* current = nullptr;
  const std::int64_t* primed = nullptr;
};

std::optional<std::int64_t> Eval(const LExpr& e, const EvalFrames& frames);
Truth Eval(const LCond& c, const EvalFrames& frames);

enum class Status { kOk, kUndefined, kNonTermination };

struct ExecState {
  std::vector<std::int64_t> slots;
  std::uint64_t fuel = 0;
  EvalMode mode = EvalMode::kExact;
  const LStmt* failure = nullptr;
};

Status Exec(const LStmt& stmt, ExecState& state);

std::string DescribeSite(const LStmt* stmt);

}  // namespace relcor::internal

#endif  // RELCOR_SRC_LOWERED_H
