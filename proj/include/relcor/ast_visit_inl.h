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

#ifndef RELCOR_AST_VISIT_INL_H
#define RELCOR_AST_VISIT_INL_H

namespace relcor {

namespace internal {

template <typename Visitor>
void VisitExpr(const Expr& expr, const Stmt& owner, bool in_index,
               Visitor& visit) {
  visit(expr, owner, in_index);
  switch (expr.kind) {
    case Expr::Kind::kArrayRead:
      VisitExpr(*expr.lhs, owner, true, visit);
      break;
    case Expr::Kind::kBinary:
      VisitExpr(*expr.lhs, owner, false, visit);
      VisitExpr(*expr.rhs, owner, false, visit);
      break;
    case Expr::Kind::kNeg:
      VisitExpr(*expr.lhs, owner, false, visit);
      break;
    default:
      break;
  }
}

template <typename Visitor>
void VisitCond(const Cond& cond, const Stmt& owner, Visitor& visit) {
  switch (cond.kind) {
    case Cond::Kind::kCompare:
      VisitExpr(*cond.lhs, owner, false, visit);
      VisitExpr(*cond.rhs, owner, false, visit);
      break;
    case Cond::Kind::kAnd:
    case Cond::Kind::kOr:
      VisitCond(*cond.left, owner, visit);
      VisitCond(*cond.right, owner, visit);
      break;
    case Cond::Kind::kNot:
      VisitCond(*cond.left, owner, visit);
      break;
    default:
      break;
  }
}

template <typename Visitor>
void VisitStmt(const Stmt& stmt, Visitor& visit) {
  switch (stmt.kind) {
    case Stmt::Kind::kAssign:
      if (stmt.index) VisitExpr(*stmt.index, stmt, true, visit);
      VisitExpr(*stmt.value, stmt, false, visit);
      break;
    case Stmt::Kind::kSeq:
      VisitStmt(*stmt.first, visit);
      VisitStmt(*stmt.second, visit);
      break;
    case Stmt::Kind::kIf:
    case Stmt::Kind::kWhile:
      VisitCond(*stmt.cond, stmt, visit);
      VisitStmt(*stmt.first, visit);
      break;
    case Stmt::Kind::kIfElse:
      VisitCond(*stmt.cond, stmt, visit);
      VisitStmt(*stmt.first, visit);
      VisitStmt(*stmt.second, visit);
      break;
    case Stmt::Kind::kBlock:
      VisitStmt(*stmt.first, visit);
      break;
    default:
      break;
  }
}

}  // namespace internal

template <typename Visitor>
void VisitExprsPreorder(const Stmt& stmt, Visitor&& visit) {
  internal::VisitStmt(stmt, visit);
}

}  // namespace relcor

#endif  // RELCOR_AST_VISIT_INL_H
