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

// AST of the C-like toy language. Nodes are immutable and shared; edits
// build new spines and reuse untouched subtrees.

#ifndef RELCOR_AST_H
#define RELCOR_AST_H

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "relcor/state_space.h"

namespace relcor {

enum class ArithOp { kAdd, kSub, kMul, kDiv, kMod };
enum class CmpOp { kLt, kLe, kGt, kGe, kEq, kNe };

const char* ToString(ArithOp op);
const char* ToString(CmpOp op);

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Expr;
struct Cond;
struct Stmt;
using ExprPtr = std::shared_ptr<const Expr>;
using CondPtr = std::shared_ptr<const Cond>;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Expr {
  enum class Kind { kLiteral, kVar, kArrayRead, kBinary, kNeg };

  Kind kind = Kind::kLiteral;
  std::int64_t value = 0;  // kLiteral
  // kVar and kArrayRead: variable name. kLiteral: the named constant the
  // literal was written as, if any.
  std::string name;
  bool primed = false;  // output-state reference (specification predicates)
  ArithOp op = ArithOp::kAdd;
  // kBinary: both operands. kArrayRead: lhs is the index. kNeg: lhs.
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Cond {
  enum class Kind { kBool, kCompare, kAnd, kOr, kNot };

  Kind kind = Kind::kBool;
  bool value = false;  // kBool
  CmpOp cmp = CmpOp::kEq;
  ExprPtr lhs;  // kCompare
  ExprPtr rhs;
  CondPtr left;  // kAnd, kOr, kNot (left only)
  CondPtr right;
};

struct Stmt {
  enum class Kind {
    kAbort,
    kSkip,
    kAssign,
    kSeq,
    kIf,
    kIfElse,
    kWhile,
    kBlock
  };

  Kind kind = Kind::kSkip;
  SourcePos pos;
  std::string target;  // kAssign
  ExprPtr index;       // kAssign to an array element
  ExprPtr value;       // kAssign
  CondPtr cond;        // kIf, kIfElse, kWhile
  StmtPtr first;       // kSeq, then-branch, loop body, block body
  StmtPtr second;      // kSeq, else-branch
  VarDecl local;       // kBlock
};

namespace ast {

ExprPtr Lit(std::int64_t value, std::string constant_name = "");
ExprPtr Var(std::string name, bool primed = false);
ExprPtr ArrayRead(std::string name, ExprPtr index, bool primed = false);
ExprPtr Binary(ArithOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr Neg(ExprPtr operand);

CondPtr Bool(bool value);
CondPtr Compare(CmpOp op, ExprPtr lhs, ExprPtr rhs);
CondPtr And(CondPtr left, CondPtr right);
CondPtr Or(CondPtr left, CondPtr right);
CondPtr Not(CondPtr operand);

StmtPtr Abort();
StmtPtr Skip();
StmtPtr Assign(std::string target, ExprPtr value);
StmtPtr AssignElement(std::string target, ExprPtr index, ExprPtr value);
StmtPtr Seq(StmtPtr first, StmtPtr second);
// Right-nested sequence; an empty list is Skip.
StmtPtr SeqOf(std::vector<StmtPtr> stmts);
StmtPtr If(CondPtr cond, StmtPtr then_branch);
StmtPtr IfElse(CondPtr cond, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr While(CondPtr cond, StmtPtr body);
StmtPtr Block(VarDecl local, StmtPtr body);

}  // namespace ast

// A program: its state space (top-level declarations in order), the named
// constants it was written with, and its body.
struct Program {
  StateSpace space;
  std::vector<std::pair<std::string, std::int64_t>> constants;
  StmtPtr body;
};

// Canonical concrete syntax. Parsing the output yields an equal program.
std::string ToSource(const Program& program);
std::string ToSource(const Stmt& stmt, int indent = 0);
std::string ToSource(const Expr& expr);
std::string ToSource(const Cond& cond);
// One-line header of a statement: the assignment itself, or the
// `while (...)` / `if (...)` line for compound statements.
std::string StatementHeader(const Stmt& stmt);

bool StructurallyEqual(const Expr& a, const Expr& b);
bool StructurallyEqual(const Cond& a, const Cond& b);
bool StructurallyEqual(const Stmt& a, const Stmt& b);
bool StructurallyEqual(const Program& a, const Program& b);

// Preorder walk over every expression node of a statement tree. Statements
// are visited before their children; an assignment visits its element
// index (if any) and then its value; compound statements visit their
// condition before their branches. `visit(expr, stmt, in_index_position)`
// receives the enclosing statement and whether `expr` is the index operand
// of an array access.
template <typename Visitor>
void VisitExprsPreorder(const Stmt& stmt, Visitor&& visit);

}  // namespace relcor

#include "relcor/ast_visit_inl.h"

#endif  // RELCOR_AST_H
