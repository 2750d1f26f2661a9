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


#include "support/random_models.h"

#include <algorithm>
#include <map>
#include <vector>

namespace relcor::testing_support {

std::uint64_t Rng::Below(std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::int64_t Rng::Between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::Chance(double probability) {
  return static_cast<double>(Below(1'000'000)) < probability * 1e6;
}

SpacePtr RandomLetterSpace(Rng& rng, int max_states) {
  return MakeSpace({VarDecl{"s", 0, rng.Between(0, max_states - 1)}});
}

Relation RandomRelation(const SpacePtr& space, Rng& rng, double density) {
  StateIndex n = *space->size();
  std::vector<Relation::Pair> pairs;
  for (StateIndex a = 0; a < n; ++a) {
    for (StateIndex b = 0; b < n; ++b) {
      if (rng.Chance(density)) pairs.emplace_back(a, b);
    }
  }
  return Relation(space, pairs);
}

Relation RandomFunction(const SpacePtr& space, Rng& rng, double defined) {
  StateIndex n = *space->size();
  std::vector<Relation::Pair> pairs;
  for (StateIndex a = 0; a < n; ++a) {
    if (rng.Chance(defined)) pairs.emplace_back(a, rng.Below(n));
  }
  return Relation(space, pairs);
}

Relation RandomCorrectFunction(const Relation& spec, Rng& rng) {
  StateIndex n = *spec.space().size();
  std::vector<Relation::Pair> pairs;
  for (StateIndex a = 0; a < n; ++a) {
    auto images = spec.Images(a);
    if (!images.empty()) {
      pairs.push_back(images[rng.Below(images.size())]);
    } else if (rng.Chance(0.5)) {
      pairs.emplace_back(a, rng.Below(n));
    }
  }
  return Relation(spec.space_ptr(), pairs);
}

PairSet ToPairs(const Relation& relation) {
  return PairSet(relation.pairs().begin(), relation.pairs().end());
}

std::set<StateIndex> NaiveDomain(const PairSet& relation) {
  std::set<StateIndex> out;
  for (const auto& pair : relation) out.insert(pair.first);
  return out;
}

bool NaiveRefines(const PairSet& refined, const PairSet& spec) {
  // RL ∩ R'L ∩ (R ∪ R') = R, with RL read as dom(R) x S.
  std::set<StateIndex> spec_dom = NaiveDomain(spec);
  std::set<StateIndex> refined_dom = NaiveDomain(refined);
  PairSet joined = spec;
  joined.insert(refined.begin(), refined.end());
  PairSet lhs;
  for (const auto& pair : joined) {
    if (spec_dom.count(pair.first) && refined_dom.count(pair.first)) {
      lhs.insert(pair);
    }
  }
  return lhs == spec;
}

PairSet NaiveClosure(const PairSet& relation, StateIndex state_count) {
  // Union of the powers R^0 .. R^n.
  PairSet power;
  for (StateIndex s = 0; s < state_count; ++s) power.emplace(s, s);
  PairSet out = power;
  for (StateIndex k = 1; k <= state_count; ++k) {
    PairSet next;
    for (const auto& [a, b] : power) {
      for (const auto& [c, d] : relation) {
        if (b == c) next.emplace(a, d);
      }
    }
    power = std::move(next);
    out.insert(power.begin(), power.end());
  }
  return out;
}

namespace {

// Sequencing nested to the right, the shape the parser produces.
StmtPtr Then(const StmtPtr& first, const StmtPtr& second) {
  if (first->kind != Stmt::Kind::kSeq) return ast::Seq(first, second);
  return ast::Seq(first->first, Then(first->second, second));
}

struct Scope {
  std::vector<std::pair<std::string, std::pair<std::int64_t, std::int64_t>>>
      scalars;  // name, interval
  bool has_array = false;
  std::int64_t array_length = 0;
};

class ProgramGen {
 public:
  ProgramGen(Rng& rng, const ProgramShape& shape) : rng_(rng), shape_(shape) {}

  Program RunOver(const StateSpace& space) {
    for (const VarDecl& decl : space.vars()) {
      if (decl.is_array()) {
        scope_.has_array = true;
        scope_.array_length = static_cast<std::int64_t>(decl.length);
      } else {
        scope_.scalars.push_back({decl.name, {decl.min, decl.max}});
      }
    }
    Program program;
    program.space = space;
    program.body = Stmt(shape_.max_depth, 0);
    return program;
  }

  CondPtr ConditionOver(const StateSpace& space) {
    for (const VarDecl& decl : space.vars()) {
      if (decl.is_array()) {
        scope_.has_array = true;
      } else {
        scope_.scalars.push_back({decl.name, {decl.min, decl.max}});
      }
    }
    return Condition(1);
  }

  Program Run() {
    Program program;
    std::vector<VarDecl> vars;
    std::uint64_t states = 1;
    const char* names[] = {"x", "y", "z"};
    int scalars = static_cast<int>(rng_.Between(1, 3));
    for (int k = 0; k < scalars; ++k) {
      std::int64_t lo = rng_.Between(-2, 1);
      std::int64_t width = rng_.Between(2, 6);
      if (states * width > static_cast<std::uint64_t>(shape_.max_states)) break;
      states *= width;
      vars.push_back(VarDecl{names[k], lo, lo + width - 1});
      scope_.scalars.push_back({names[k], {lo, lo + width - 1}});
    }
    if (shape_.allow_arrays && states * 4 <= std::uint64_t(shape_.max_states) &&
        rng_.Chance(0.35)) {
      vars.push_back(VarDecl{"a", 0, 1, 2});
      scope_.has_array = true;
      scope_.array_length = 2;
    }
    program.space = StateSpace(vars);
    program.body = Stmt(shape_.max_depth, 0);
    return program;
  }

 private:
  ExprPtr Leaf() {
    std::uint64_t pick = rng_.Below(scope_.has_array ? 5 : 4);
    if (pick == 0) return ast::Lit(rng_.Between(-1, 3));
    if (pick == 4) {
      ExprPtr index = rng_.Chance(0.5) ? ast::Lit(rng_.Between(0, 2))
                                       : ScalarRead();
      return ast::ArrayRead("a", index);
    }
    return ScalarRead();
  }

  ExprPtr ScalarRead() {
    const auto& var = scope_.scalars[rng_.Below(scope_.scalars.size())];
    return ast::Var(var.first);
  }

  ExprPtr Expression(int depth) {
    if (depth <= 0 || rng_.Chance(0.4)) return Leaf();
    if (rng_.Chance(0.1)) return ast::Neg(Expression(depth - 1));
    ArithOp ops[] = {ArithOp::kAdd, ArithOp::kAdd, ArithOp::kSub,
                     ArithOp::kSub, ArithOp::kMul, ArithOp::kDiv,
                     ArithOp::kMod};
    return ast::Binary(ops[rng_.Below(7)], Expression(depth - 1),
                       Expression(depth - 1));
  }

  CondPtr Condition(int depth) {
    if (depth > 0 && rng_.Chance(0.25)) {
      switch (rng_.Below(3)) {
        case 0:
          return ast::And(Condition(depth - 1), Condition(depth - 1));
        case 1:
          return ast::Or(Condition(depth - 1), Condition(depth - 1));
        default:
          return ast::Not(Condition(depth - 1));
      }
    }
    if (rng_.Chance(0.05)) return ast::Bool(rng_.Chance(0.5));
    CmpOp cmps[] = {CmpOp::kLt, CmpOp::kLe, CmpOp::kGt,
                    CmpOp::kGe, CmpOp::kEq, CmpOp::kNe};
    return ast::Compare(cmps[rng_.Below(6)], Expression(1), Expression(1));
  }

  StmtPtr Assignment() {
    if (scope_.has_array && rng_.Chance(0.2)) {
      ExprPtr index = rng_.Chance(0.5) ? ast::Lit(rng_.Between(0, 1))
                                       : ScalarRead();
      return ast::AssignElement("a", index, Expression(2));
    }
    const auto& var = scope_.scalars[rng_.Below(scope_.scalars.size())];
    return ast::Assign(var.first, Expression(2));
  }

  StmtPtr Stmt(int depth, int loops) {
    if (depth <= 0) return rng_.Chance(0.9) ? Assignment() : ast::Skip();
    std::uint64_t pick = rng_.Below(100);
    if (pick < 25) return Assignment();
    if (pick < 45) return Then(Stmt(depth - 1, loops), Stmt(depth - 1, loops));
    if (pick < 57) return ast::If(Condition(1), Stmt(depth - 1, loops));
    if (pick < 69) {
      return ast::IfElse(Condition(1), Stmt(depth - 1, loops),
                         Stmt(depth - 1, loops));
    }
    if (pick < 84 && loops < shape_.max_loop_nesting) return Loop(depth, loops);
    if (pick < 92 && shape_.allow_blocks && locals_ < 2) return LocalBlock(depth, loops);
    if (pick < 95 && shape_.allow_abort) return ast::Abort();
    if (pick < 97) return ast::Skip();
    return Assignment();
  }

  StmtPtr Loop(int depth, int loops) {
    if (rng_.Chance(0.6)) {
      // Counter loop: usually terminates, may leave the interval.
      const auto& var = scope_.scalars[rng_.Below(scope_.scalars.size())];
      bool up = rng_.Chance(0.5);
      CondPtr guard = ast::Compare(up ? CmpOp::kLt : CmpOp::kGt,
                                   ast::Var(var.first), Expression(1));
      StmtPtr step = ast::Assign(
          var.first, ast::Binary(up ? ArithOp::kAdd : ArithOp::kSub,
                                 ast::Var(var.first), ast::Lit(1)));
      return ast::While(guard, Then(Stmt(depth - 1, loops + 1), step));
    }
    return ast::While(Condition(1), Stmt(depth - 1, loops + 1));
  }

  StmtPtr LocalBlock(int depth, int loops) {
    std::string name = "t" + std::to_string(locals_++);
    std::int64_t lo = rng_.Between(-1, 0);
    VarDecl local{name, lo, lo + 2};
    StmtPtr init = ast::Assign(name, Expression(1));
    scope_.scalars.push_back({name, {lo, lo + 2}});
    StmtPtr body = Stmt(depth - 1, loops);
    scope_.scalars.pop_back();
    return ast::Block(local, Then(init, body));
  }

  Rng& rng_;
  const ProgramShape& shape_;
  Scope scope_;
  int locals_ = 0;
};

ExprPtr PrimedFormula(const StateSpace& space, Rng& rng) {
  // Mix of output and input reads.
  auto read = [&](bool primed) -> ExprPtr {
    const VarDecl& decl = space.vars()[rng.Below(space.vars().size())];
    if (decl.is_array()) {
      return ast::ArrayRead(decl.name, ast::Lit(rng.Between(0, decl.length - 1)),
                            primed);
    }
    return ast::Var(decl.name, primed);
  };
  ExprPtr out = rng.Chance(0.5) ? read(false) : ast::Lit(rng.Between(-1, 2));
  if (rng.Chance(0.6)) {
    ArithOp ops[] = {ArithOp::kAdd, ArithOp::kSub, ArithOp::kMul};
    out = ast::Binary(ops[rng.Below(3)], out,
                      rng.Chance(0.5) ? read(false) : ast::Lit(rng.Between(0, 2)));
  }
  return out;
}

}  // namespace

Program RandomProgram(Rng& rng, const ProgramShape& shape) {
  return ProgramGen(rng, shape).Run();
}

Program RandomProgramOver(Rng& rng, const ProgramShape& shape,
                          const StateSpace& space) {
  return ProgramGen(rng, shape).RunOver(space);
}

CondPtr RandomCondition(Rng& rng, const StateSpace& space) {
  ProgramShape shape;
  return ProgramGen(rng, shape).ConditionOver(space);
}

Spec RandomSpec(const StateSpace& space, Rng& rng) {
  auto read = [&](bool primed) -> ExprPtr {
    const VarDecl& decl = space.vars()[rng.Below(space.vars().size())];
    if (decl.is_array()) {
      return ast::ArrayRead(decl.name,
                            ast::Lit(rng.Between(0, decl.length - 1)), primed);
    }
    return ast::Var(decl.name, primed);
  };
  CmpOp cmps[] = {CmpOp::kLt, CmpOp::kLe, CmpOp::kGt,
                  CmpOp::kGe, CmpOp::kEq, CmpOp::kNe};
  CondPtr dom = ast::Bool(true);
  if (rng.Chance(0.6)) {
    dom = ast::Compare(cmps[rng.Below(6)], read(false),
                       rng.Chance(0.5) ? read(false) : ast::Lit(rng.Between(-1, 2)));
  }
  CondPtr rel = ast::Compare(rng.Chance(0.6) ? CmpOp::kEq : cmps[rng.Below(6)],
                             read(true), PrimedFormula(space, rng));
  if (rng.Chance(0.4)) {
    rel = ast::And(rel, ast::Compare(cmps[rng.Below(6)], read(true),
                                     PrimedFormula(space, rng)));
  } else if (rng.Chance(0.2)) {
    rel = ast::Or(rel, ast::Compare(CmpOp::kEq, read(true), read(false)));
  }
  return Spec::Predicate(space, ToSource(*dom), ToSource(*rel));
}

std::uint64_t AmpleFuel(const Program& program) {
  std::uint64_t frame = *program.space.size();
  std::uint64_t loops = 0;
  std::vector<const relcor::Stmt*> stack{program.body.get()};
  while (!stack.empty()) {
    const relcor::Stmt* stmt = stack.back();
    stack.pop_back();
    if (stmt->kind == relcor::Stmt::Kind::kWhile) ++loops;
    if (stmt->kind == relcor::Stmt::Kind::kBlock) frame *= stmt->local.value_count();
    if (stmt->first) stack.push_back(stmt->first.get());
    if (stmt->second) stack.push_back(stmt->second.get());
  }
  // A terminating deterministic run never revisits a (loop, frame) pair.
  return loops * frame + 1;
}

}  // namespace relcor::testing_support
