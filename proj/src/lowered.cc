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

#include "lowered.h"

#include <limits>
#include <map>

#include "relcor/errors.h"

namespace relcor::internal {

namespace {

struct Binding {
  std::uint32_t slot;
  const VarDecl* decl;
};

class Resolver {
 public:
  explicit Resolver(const StateSpace& space) {
    scopes_.emplace_back();
    for (std::size_t i = 0; i < space.vars().size(); ++i) {
      scopes_.back()[space.vars()[i].name] = {
          static_cast<std::uint32_t>(space.offset(i)), &space.vars()[i]};
    }
    frame_ = space.slot_count();
    max_frame_ = frame_;
  }

  std::unique_ptr<LExpr> LowerE(const Expr& e) {
    auto out = std::make_unique<LExpr>();
    out->kind = e.kind;
    out->op = e.op;
    out->value = e.value;
    out->primed = e.primed;
    if (e.kind == Expr::Kind::kVar || e.kind == Expr::Kind::kArrayRead) {
      Binding b = Resolve(e.name);
      bool wants_array = e.kind == Expr::Kind::kArrayRead;
      if (wants_array != b.decl->is_array()) {
        throw ModelError("variable '" + e.name + "' used with wrong shape");
      }
      out->slot = b.slot;
      out->length = static_cast<std::uint32_t>(b.decl->length);
    }
    if (e.lhs) out->lhs = LowerE(*e.lhs);
    if (e.rhs) out->rhs = LowerE(*e.rhs);
    return out;
  }

  std::unique_ptr<LCond> LowerC(const Cond& c) {
    auto out = std::make_unique<LCond>();
    out->kind = c.kind;
    out->value = c.value;
    out->cmp = c.cmp;
    if (c.lhs) out->lhs = LowerE(*c.lhs);
    if (c.rhs) out->rhs = LowerE(*c.rhs);
    if (c.left) out->left = LowerC(*c.left);
    if (c.right) out->right = LowerC(*c.right);
    return out;
  }

  std::unique_ptr<LStmt> LowerS(const Stmt& s) {
    auto out = std::make_unique<LStmt>();
    out->kind = s.kind;
    out->source = &s;
    switch (s.kind) {
      case Stmt::Kind::kAssign: {
        Binding b = Resolve(s.target);
        if (bool(s.index) != b.decl->is_array()) {
          throw ModelError("variable '" + s.target +
                           "' assigned with wrong shape");
        }
        out->slot = b.slot;
        out->length = static_cast<std::uint32_t>(b.decl->length);
        out->min = b.decl->min;
        out->max = b.decl->max;
        if (s.index) out->index = LowerE(*s.index);
        out->value = LowerE(*s.value);
        break;
      }
      case Stmt::Kind::kSeq:
        out->first = LowerS(*s.first);
        out->second = LowerS(*s.second);
        break;
      case Stmt::Kind::kIf:
      case Stmt::Kind::kWhile:
        out->cond = LowerC(*s.cond);
        out->first = LowerS(*s.first);
        break;
      case Stmt::Kind::kIfElse:
        out->cond = LowerC(*s.cond);
        out->first = LowerS(*s.first);
        out->second = LowerS(*s.second);
        break;
      case Stmt::Kind::kBlock: {
        out->local = s.local;
        out->local_slot = static_cast<std::uint32_t>(frame_);
        scopes_.emplace_back();
        scopes_.back()[s.local.name] = {out->local_slot, &s.local};
        frame_ += s.local.width();
        if (frame_ > max_frame_) max_frame_ = frame_;
        out->first = LowerS(*s.first);
        frame_ -= s.local.width();
        scopes_.pop_back();
        break;
      }
      default:
        break;
    }
    return out;
  }

  std::size_t max_frame() const { return max_frame_; }

 private:
  Binding Resolve(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return f->second;
    }
    throw ModelError("undeclared variable '" + name + "'");
  }

  std::vector<std::map<std::string, Binding>> scopes_;
  std::size_t frame_ = 0;
  std::size_t max_frame_ = 0;
};

bool Arith(ArithOp op, std::int64_t a, std::int64_t b, std::int64_t* out) {
  switch (op) {
    case ArithOp::kAdd:
      return !__builtin_add_overflow(a, b, out);
    case ArithOp::kSub:
      return !__builtin_sub_overflow(a, b, out);
    case ArithOp::kMul:
      return !__builtin_mul_overflow(a, b, out);
    case ArithOp::kDiv:
    case ArithOp::kMod:
      if (b == 0) return false;
      if (a == std::numeric_limits<std::int64_t>::min() && b == -1) {
        return false;
      }
      // C++ integer division already truncates toward zero.
      *out = op == ArithOp::kDiv ? a / b : a % b;
      return true;
  }
  return false;
}

bool Compare(CmpOp op, std::int64_t a, std::int64_t b) {
  switch (op) {
    case CmpOp::kLt:
      return a < b;
    case CmpOp::kLe:
      return a <= b;
    case CmpOp::kGt:
      return a > b;
    case CmpOp::kGe:
      return a >= b;
    case CmpOp::kEq:
      return a == b;
    case CmpOp::kNe:
      return a != b;
  }
  return false;
}

}  // namespace

LoweredProgram Lower(const Program& program) {
  LoweredProgram out;
  out.space = program.space;
  Resolver resolver(out.space);
  out.body = resolver.LowerS(*program.body);
  out.frame_slots = resolver.max_frame();
  return out;
}

std::unique_ptr<LCond> LowerCond(const Cond& cond, const StateSpace& space) {
  Resolver resolver(space);
  return resolver.LowerC(cond);
}

std::unique_ptr<LExpr> LowerExpr(const Expr& expr, const StateSpace& space) {
  Resolver resolver(space);
  return resolver.LowerE(expr);
}

std::optional<std::int64_t> Eval(const LExpr& e, const EvalFrames& frames) {
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      return e.value;
    case Expr::Kind::kVar: {
      const std::int64_t* frame = e.primed ? frames.primed : frames.current;
      return frame[e.slot];
    }
    case Expr::Kind::kArrayRead: {
      auto index = Eval(*e.lhs, frames);
      if (!index || *index < 0 || *index >= e.length) return std::nullopt;
      const std::int64_t* frame = e.primed ? frames.primed : frames.current;
      return frame[e.slot + *index];
    }
    case Expr::Kind::kBinary: {
      auto a = Eval(*e.lhs, frames);
      if (!a) return std::nullopt;
      auto b = Eval(*e.rhs, frames);
      if (!b) return std::nullopt;
      std::int64_t result;
      if (!Arith(e.op, *a, *b, &result)) return std::nullopt;
      return result;
    }
    case Expr::Kind::kNeg: {
      auto a = Eval(*e.lhs, frames);
      if (!a || *a == std::numeric_limits<std::int64_t>::min()) {
        return std::nullopt;
      }
      return -*a;
    }
  }
  return std::nullopt;
}

Truth Eval(const LCond& c, const EvalFrames& frames) {
  switch (c.kind) {
    case Cond::Kind::kBool:
      return c.value ? Truth::kTrue : Truth::kFalse;
    case Cond::Kind::kCompare: {
      auto a = Eval(*c.lhs, frames);
      auto b = Eval(*c.rhs, frames);
      if (!a || !b) return Truth::kUndefined;
      return Compare(c.cmp, *a, *b) ? Truth::kTrue : Truth::kFalse;
    }
    case Cond::Kind::kAnd: {
      // Both operands must be defined: conditions are total or undefined.
      Truth l = Eval(*c.left, frames);
      Truth r = Eval(*c.right, frames);
      if (l == Truth::kUndefined || r == Truth::kUndefined) {
        return Truth::kUndefined;
      }
      return (l == Truth::kTrue && r == Truth::kTrue) ? Truth::kTrue
                                                      : Truth::kFalse;
    }
    case Cond::Kind::kOr: {
      Truth l = Eval(*c.left, frames);
      Truth r = Eval(*c.right, frames);
      if (l == Truth::kUndefined || r == Truth::kUndefined) {
        return Truth::kUndefined;
      }
      return (l == Truth::kTrue || r == Truth::kTrue) ? Truth::kTrue
                                                      : Truth::kFalse;
    }
    case Cond::Kind::kNot: {
      Truth l = Eval(*c.left, frames);
      if (l == Truth::kUndefined) return l;
      return l == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
    }
  }
  return Truth::kUndefined;
}

Status Exec(const LStmt& s, ExecState& state) {
  EvalFrames frames{state.slots.data(), nullptr};
  switch (s.kind) {
    case Stmt::Kind::kAbort:
      state.failure = &s;
      return Status::kUndefined;
    case Stmt::Kind::kSkip:
      return Status::kOk;
    case Stmt::Kind::kAssign: {
      std::uint32_t slot = s.slot;
      if (s.index) {
        auto index = Eval(*s.index, frames);
        if (!index || *index < 0 || *index >= s.length) {
          state.failure = &s;
          return Status::kUndefined;
        }
        slot += static_cast<std::uint32_t>(*index);
      }
      auto value = Eval(*s.value, frames);
      if (!value || (state.mode == EvalMode::kExact &&
                     (*value < s.min || *value > s.max))) {
        state.failure = &s;
        return Status::kUndefined;
      }
      state.slots[slot] = *value;
      return Status::kOk;
    }
    case Stmt::Kind::kSeq: {
      Status first = Exec(*s.first, state);
      if (first != Status::kOk) return first;
      return Exec(*s.second, state);
    }
    case Stmt::Kind::kIf:
    case Stmt::Kind::kIfElse: {
      Truth t = Eval(*s.cond, frames);
      if (t == Truth::kUndefined) {
        state.failure = &s;
        return Status::kUndefined;
      }
      if (t == Truth::kTrue) return Exec(*s.first, state);
      if (s.kind == Stmt::Kind::kIfElse) return Exec(*s.second, state);
      return Status::kOk;
    }
    case Stmt::Kind::kWhile:
      while (true) {
        Truth t = Eval(*s.cond, EvalFrames{state.slots.data(), nullptr});
        if (t == Truth::kUndefined) {
          state.failure = &s;
          return Status::kUndefined;
        }
        if (t == Truth::kFalse) return Status::kOk;
        // Charged up front so nested loops cannot drive the counter below
        // zero.
        if (state.fuel == 0) return Status::kNonTermination;
        --state.fuel;
        Status body = Exec(*s.first, state);
        if (body != Status::kOk) return body;
      }
    case Stmt::Kind::kBlock: {
      std::int64_t init = ClampToDomain(s.local, 0);
      for (std::size_t k = 0; k < s.local.width(); ++k) {
        state.slots[s.local_slot + k] = init;
      }
      return Exec(*s.first, state);
    }
  }
  return Status::kUndefined;
}

std::string DescribeSite(const LStmt* stmt) {
  if (!stmt || !stmt->source) return "unknown";
  const Stmt& s = *stmt->source;
  std::string where = s.pos.line > 0 ? std::to_string(s.pos.line) + ":" +
                                           std::to_string(s.pos.column) + ": "
                                     : "";
  return where + StatementHeader(s);
}

}  // namespace relcor::internal
