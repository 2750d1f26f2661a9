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

#include "relcor/ast.h"

#include <cstdint>
#include <limits>
#include <sstream>

namespace relcor {

const char* ToString(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return "+";
    case ArithOp::kSub:
      return "-";
    case ArithOp::kMul:
      return "*";
    case ArithOp::kDiv:
      return "/";
    case ArithOp::kMod:
      return "%";
  }
  return "?";
}

const char* ToString(CmpOp op) {
  switch (op) {
    case CmpOp::kLt:
      return "<";
    case CmpOp::kLe:
      return "<=";
    case CmpOp::kGt:
      return ">";
    case CmpOp::kGe:
      return ">=";
    case CmpOp::kEq:
      return "==";
    case CmpOp::kNe:
      return "!=";
  }
  return "?";
}

namespace ast {

ExprPtr Lit(std::int64_t value, std::string constant_name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::kLiteral;
  e->value = value;
  e->name = std::move(constant_name);
  return e;
}

ExprPtr Var(std::string name, bool primed) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::kVar;
  e->name = std::move(name);
  e->primed = primed;
  return e;
}

ExprPtr ArrayRead(std::string name, ExprPtr index, bool primed) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::kArrayRead;
  e->name = std::move(name);
  e->primed = primed;
  e->lhs = std::move(index);
  return e;
}

ExprPtr Binary(ArithOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::kBinary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr Neg(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::kNeg;
  e->lhs = std::move(operand);
  return e;
}

CondPtr Bool(bool value) {
  auto c = std::make_shared<Cond>();
  c->kind = Cond::Kind::kBool;
  c->value = value;
  return c;
}

CondPtr Compare(CmpOp op, ExprPtr lhs, ExprPtr rhs) {
  auto c = std::make_shared<Cond>();
  c->kind = Cond::Kind::kCompare;
  c->cmp = op;
  c->lhs = std::move(lhs);
  c->rhs = std::move(rhs);
  return c;
}

CondPtr And(CondPtr left, CondPtr right) {
  auto c = std::make_shared<Cond>();
  c->kind = Cond::Kind::kAnd;
  c->left = std::move(left);
  c->right = std::move(right);
  return c;
}

CondPtr Or(CondPtr left, CondPtr right) {
  auto c = std::make_shared<Cond>();
  c->kind = Cond::Kind::kOr;
  c->left = std::move(left);
  c->right = std::move(right);
  return c;
}

CondPtr Not(CondPtr operand) {
  auto c = std::make_shared<Cond>();
  c->kind = Cond::Kind::kNot;
  c->left = std::move(operand);
  return c;
}

namespace {

StmtPtr Simple(Stmt::Kind kind) {
  auto s = std::make_shared<Stmt>();
  s->kind = kind;
  return s;
}

}  // namespace

StmtPtr Abort() { return Simple(Stmt::Kind::kAbort); }
StmtPtr Skip() { return Simple(Stmt::Kind::kSkip); }

StmtPtr Assign(std::string target, ExprPtr value) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::kAssign;
  s->target = std::move(target);
  s->value = std::move(value);
  return s;
}

StmtPtr AssignElement(std::string target, ExprPtr index, ExprPtr value) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::kAssign;
  s->target = std::move(target);
  s->index = std::move(index);
  s->value = std::move(value);
  return s;
}

StmtPtr Seq(StmtPtr first, StmtPtr second) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::kSeq;
  s->first = std::move(first);
  s->second = std::move(second);
  return s;
}

StmtPtr SeqOf(std::vector<StmtPtr> stmts) {
  if (stmts.empty()) return Skip();
  StmtPtr result = stmts.back();
  for (std::size_t i = stmts.size() - 1; i-- > 0;) {
    result = Seq(stmts[i], result);
  }
  return result;
}

StmtPtr If(CondPtr cond, StmtPtr then_branch) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::kIf;
  s->cond = std::move(cond);
  s->first = std::move(then_branch);
  return s;
}

StmtPtr IfElse(CondPtr cond, StmtPtr then_branch, StmtPtr else_branch) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::kIfElse;
  s->cond = std::move(cond);
  s->first = std::move(then_branch);
  s->second = std::move(else_branch);
  return s;
}

StmtPtr While(CondPtr cond, StmtPtr body) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::kWhile;
  s->cond = std::move(cond);
  s->first = std::move(body);
  return s;
}

StmtPtr Block(VarDecl local, StmtPtr body) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::kBlock;
  s->local = std::move(local);
  s->first = std::move(body);
  return s;
}

}  // namespace ast

namespace {

int Precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kBinary:
      return (e.op == ArithOp::kAdd || e.op == ArithOp::kSub) ? 1 : 2;
    case Expr::Kind::kNeg:
      return 3;
    case Expr::Kind::kLiteral:
      return e.value < 0 && e.name.empty() ? 3 : 4;
    default:
      return 4;
  }
}

int Precedence(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::kOr:
      return 1;
    case Cond::Kind::kAnd:
      return 2;
    case Cond::Kind::kNot:
      return 3;
    default:
      return 4;
  }
}

std::string Parenthesize(const std::string& text, bool wrap) {
  return wrap ? "(" + text + ")" : text;
}

std::string DeclType(const VarDecl& decl) {
  if (decl.min == std::numeric_limits<std::int32_t>::min() &&
      decl.max == std::numeric_limits<std::int32_t>::max()) {
    return "int";
  }
  return "int<" + std::to_string(decl.min) + ".." + std::to_string(decl.max) +
         ">";
}

std::string DeclText(const VarDecl& decl) {
  std::string text = DeclType(decl) + " " + decl.name;
  if (decl.is_array()) text += "[" + std::to_string(decl.length) + "]";
  return text + ";";
}

void Flatten(const Stmt& stmt, std::vector<const Stmt*>& out) {
  if (stmt.kind == Stmt::Kind::kSeq) {
    Flatten(*stmt.first, out);
    Flatten(*stmt.second, out);
  } else {
    out.push_back(&stmt);
  }
}

void PrintStmt(const Stmt& stmt, int indent, std::ostringstream& out);

void PrintBraced(const Stmt& stmt, int indent, std::ostringstream& out) {
  out << "{\n";
  if (stmt.kind == Stmt::Kind::kBlock) {
    // The braces of the branch double as the block's braces.
    out << std::string(indent + 2, ' ') << DeclText(stmt.local) << "\n";
    std::vector<const Stmt*> items;
    Flatten(*stmt.first, items);
    for (const Stmt* s : items) PrintStmt(*s, indent + 2, out);
  } else {
    std::vector<const Stmt*> items;
    Flatten(stmt, items);
    for (const Stmt* s : items) PrintStmt(*s, indent + 2, out);
  }
  out << std::string(indent, ' ') << "}";
}

void PrintStmt(const Stmt& stmt, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  switch (stmt.kind) {
    case Stmt::Kind::kAbort:
    case Stmt::Kind::kSkip:
    case Stmt::Kind::kAssign:
      out << pad << StatementHeader(stmt) << "\n";
      break;
    case Stmt::Kind::kSeq: {
      std::vector<const Stmt*> items;
      Flatten(stmt, items);
      for (const Stmt* s : items) PrintStmt(*s, indent, out);
      break;
    }
    case Stmt::Kind::kIf:
    case Stmt::Kind::kWhile:
      out << pad << StatementHeader(stmt) << " ";
      PrintBraced(*stmt.first, indent, out);
      out << "\n";
      break;
    case Stmt::Kind::kIfElse:
      out << pad << StatementHeader(stmt) << " ";
      PrintBraced(*stmt.first, indent, out);
      out << " else ";
      PrintBraced(*stmt.second, indent, out);
      out << "\n";
      break;
    case Stmt::Kind::kBlock:
      out << pad;
      PrintBraced(stmt, indent, out);
      out << "\n";
      break;
  }
}

}  // namespace

std::string ToSource(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      return e.name.empty() ? std::to_string(e.value) : e.name;
    case Expr::Kind::kVar:
      return e.name + (e.primed ? "'" : "");
    case Expr::Kind::kArrayRead:
      return e.name + (e.primed ? "'" : "") + "[" + ToSource(*e.lhs) + "]";
    case Expr::Kind::kBinary: {
      int prec = Precedence(e);
      return Parenthesize(ToSource(*e.lhs), Precedence(*e.lhs) < prec) + " " +
             ToString(e.op) + " " +
             Parenthesize(ToSource(*e.rhs), Precedence(*e.rhs) <= prec);
    }
    case Expr::Kind::kNeg: {
      bool atom = e.lhs->kind == Expr::Kind::kVar ||
                  e.lhs->kind == Expr::Kind::kArrayRead;
      return "-" + Parenthesize(ToSource(*e.lhs), !atom);
    }
  }
  return "?";
}

std::string ToSource(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::kBool:
      return c.value ? "true" : "false";
    case Cond::Kind::kCompare:
      return ToSource(*c.lhs) + " " + ToString(c.cmp) + " " + ToSource(*c.rhs);
    case Cond::Kind::kAnd:
    case Cond::Kind::kOr: {
      int prec = Precedence(c);
      const char* op = c.kind == Cond::Kind::kAnd ? " && " : " || ";
      return Parenthesize(ToSource(*c.left), Precedence(*c.left) < prec) + op +
             Parenthesize(ToSource(*c.right), Precedence(*c.right) <= prec);
    }
    case Cond::Kind::kNot:
      return "!" + Parenthesize(ToSource(*c.left), true);
  }
  return "?";
}

std::string StatementHeader(const Stmt& stmt) {
  switch (stmt.kind) {
    case Stmt::Kind::kAbort:
      return "abort;";
    case Stmt::Kind::kSkip:
      return "skip;";
    case Stmt::Kind::kAssign: {
      std::string lhs = stmt.target;
      if (stmt.index) lhs += "[" + ToSource(*stmt.index) + "]";
      return lhs + " = " + ToSource(*stmt.value) + ";";
    }
    case Stmt::Kind::kSeq:
      return StatementHeader(*stmt.first);
    case Stmt::Kind::kIf:
    case Stmt::Kind::kIfElse:
      return "if (" + ToSource(*stmt.cond) + ")";
    case Stmt::Kind::kWhile:
      return "while (" + ToSource(*stmt.cond) + ")";
    case Stmt::Kind::kBlock:
      return DeclText(stmt.local);
  }
  return "?";
}

std::string ToSource(const Stmt& stmt, int indent) {
  std::ostringstream out;
  PrintStmt(stmt, indent, out);
  return out.str();
}

std::string ToSource(const Program& program) {
  std::ostringstream out;
  for (const auto& [name, value] : program.constants) {
    out << "const " << name << " = " << value << ";\n";
  }
  for (const VarDecl& decl : program.space.vars()) {
    out << DeclText(decl) << "\n";
  }
  if (program.body) PrintStmt(*program.body, 0, out);
  return out.str();
}

bool StructurallyEqual(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::kLiteral:
      return a.value == b.value && a.name == b.name;
    case Expr::Kind::kVar:
      return a.name == b.name && a.primed == b.primed;
    case Expr::Kind::kArrayRead:
      return a.name == b.name && a.primed == b.primed &&
             StructurallyEqual(*a.lhs, *b.lhs);
    case Expr::Kind::kBinary:
      return a.op == b.op && StructurallyEqual(*a.lhs, *b.lhs) &&
             StructurallyEqual(*a.rhs, *b.rhs);
    case Expr::Kind::kNeg:
      return StructurallyEqual(*a.lhs, *b.lhs);
  }
  return false;
}

bool StructurallyEqual(const Cond& a, const Cond& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Cond::Kind::kBool:
      return a.value == b.value;
    case Cond::Kind::kCompare:
      return a.cmp == b.cmp && StructurallyEqual(*a.lhs, *b.lhs) &&
             StructurallyEqual(*a.rhs, *b.rhs);
    case Cond::Kind::kAnd:
    case Cond::Kind::kOr:
      return StructurallyEqual(*a.left, *b.left) &&
             StructurallyEqual(*a.right, *b.right);
    case Cond::Kind::kNot:
      return StructurallyEqual(*a.left, *b.left);
  }
  return false;
}

bool StructurallyEqual(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Stmt::Kind::kAbort:
    case Stmt::Kind::kSkip:
      return true;
    case Stmt::Kind::kAssign:
      if (a.target != b.target || bool(a.index) != bool(b.index)) return false;
      if (a.index && !StructurallyEqual(*a.index, *b.index)) return false;
      return StructurallyEqual(*a.value, *b.value);
    case Stmt::Kind::kSeq:
      return StructurallyEqual(*a.first, *b.first) &&
             StructurallyEqual(*a.second, *b.second);
    case Stmt::Kind::kIf:
    case Stmt::Kind::kWhile:
      return StructurallyEqual(*a.cond, *b.cond) &&
             StructurallyEqual(*a.first, *b.first);
    case Stmt::Kind::kIfElse:
      return StructurallyEqual(*a.cond, *b.cond) &&
             StructurallyEqual(*a.first, *b.first) &&
             StructurallyEqual(*a.second, *b.second);
    case Stmt::Kind::kBlock:
      return a.local == b.local && StructurallyEqual(*a.first, *b.first);
  }
  return false;
}

bool StructurallyEqual(const Program& a, const Program& b) {
  return a.space == b.space && StructurallyEqual(*a.body, *b.body);
}

}  // namespace relcor
