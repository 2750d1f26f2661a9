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


#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "relcor/errors.h"
#include "relcor/interpreter.h"
#include "relcor/parser.h"
#include "relcor/semantics.h"

namespace relcor {
namespace {

std::string ReadFixture(const std::string& path) {
  std::ifstream in(std::string(RELCOR_DATA_DIR) + "/studies/" + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

State MakeState(const StateSpace& space, std::vector<std::int64_t> slots) {
  State state{std::move(slots)};
  EXPECT_TRUE(space.Contains(state));
  return state;
}

TEST(ParseTest, SkipOnly) {
  Program program = ParseProgram("skip;");
  ASSERT_EQ(program.body->kind, Stmt::Kind::kSkip);
  EXPECT_TRUE(program.space.vars().empty());
}

TEST(ParseTest, ArraySumShape) {
  Program program = ParseProgram(ReadFixture("arraysum/p.imp"));
  ASSERT_EQ(program.space.vars().size(), 3u);
  EXPECT_EQ(program.space.vars()[0].length, 4u);
  const Stmt& body = *program.body;
  ASSERT_EQ(body.kind, Stmt::Kind::kSeq);
  EXPECT_EQ(body.first->kind, Stmt::Kind::kAssign);
  EXPECT_EQ(body.first->target, "x");
  ASSERT_EQ(body.second->kind, Stmt::Kind::kSeq);
  EXPECT_EQ(body.second->first->target, "i");
  EXPECT_EQ(body.second->second->kind, Stmt::Kind::kWhile);
}

TEST(ParseTest, MissingExpressionIsSyntaxError) {
  try {
    ParseProgram("int x; x = ;");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 12u);
  }
}

TEST(ParseTest, UndeclaredVariable) {
  EXPECT_THROW(ParseProgram("int x; x = y;"), ParseError);
  EXPECT_THROW(ParseProgram("int x; { int t; } t = 1;"), ParseError);
}

TEST(ParseTest, CanonicalSourceRoundTrips) {
  for (const char* path : {"arraysum/p.imp", "fermat/basep.imp",
                           "fermat/correct.imp"}) {
    Program program = ParseProgram(ReadFixture(path));
    std::string source = ToSource(program);
    Program again = ParseProgram(source);
    EXPECT_TRUE(StructurallyEqual(program, again)) << source;
    EXPECT_EQ(ToSource(again), source);
  }
}

TEST(ExecuteTest, SkipReturnsInput) {
  Program program = ParseProgram("int<0..3> x; skip;");
  State input = MakeState(program.space, {2});
  ExecOutcome outcome = Execute(program, input, 1);
  ASSERT_TRUE(outcome.is_final());
  EXPECT_EQ(outcome.final_state, input);
}

TEST(ExecuteTest, DivergentLoop) {
  Program program = ParseProgram("int<0..3> x; while (true) { skip; }");
  for (std::uint64_t fuel : {0u, 1u, 7u, 1000u}) {
    EXPECT_EQ(Execute(program, MakeState(program.space, {0}), fuel).kind,
              ExecOutcome::Kind::kNonTermination);
  }
}

TEST(ExecuteTest, ArraySumOnSample) {
  Program program = ParseProgram(ReadFixture("arraysum/p.imp"));
  // a = [1, 2, 0, 2], x = 0, i = 0
  ExecOutcome outcome =
      Execute(program, MakeState(program.space, {1, 2, 0, 2, 0, 0}), 100);
  ASSERT_TRUE(outcome.is_final());
  EXPECT_EQ(outcome.final_state.slots,
            (std::vector<std::int64_t>{1, 2, 0, 2, 3, 3}));
}

TEST(ExecuteTest, UndefinedSites) {
  Program program = ParseProgram("int<0..3> x; x = 4 / x;");
  ExecOutcome zero = Execute(program, MakeState(program.space, {0}), 1);
  EXPECT_EQ(zero.kind, ExecOutcome::Kind::kUndefined);
  EXPECT_NE(zero.site.find("x = 4 / x;"), std::string::npos) << zero.site;
  // 4 / 1 leaves the declared interval in exact mode only.
  EXPECT_EQ(Execute(program, MakeState(program.space, {1}), 1).kind,
            ExecOutcome::Kind::kUndefined);
  ExecOutcome machine =
      Execute(program, MakeState(program.space, {1}), 1, EvalMode::kMachine);
  ASSERT_TRUE(machine.is_final());
  EXPECT_EQ(machine.final_state.slots[0], 4);
}

TEST(ExecuteTest, TruncatingDivision) {
  Program program = ParseProgram("int q, m; q = -7 / 2; m = -7 % 2;");
  ExecOutcome outcome = Execute(program, program.space.ZeroState(), 1);
  ASSERT_TRUE(outcome.is_final());
  EXPECT_EQ(outcome.final_state.slots,
            (std::vector<std::int64_t>{-3, -1}));
}

TEST(ExecuteTest, MachineOverflowIsUndefined) {
  Program program = ParseProgram(
      "int x; x = 2147483647; while (true) { x = x * x; }");
  EXPECT_EQ(
      Execute(program, program.space.ZeroState(), 100, EvalMode::kMachine)
          .kind,
      ExecOutcome::Kind::kUndefined);
}

TEST(ExecModeFunctionTest, SkipIsIdentity) {
  Program program = ParseProgram("int x; skip;");
  std::vector<State> inputs{State{{1}}, State{{5}}};
  auto function = ExecModeFunction(program, inputs, 10);
  ASSERT_EQ(function.size(), 2u);
  EXPECT_EQ(function.at(inputs[0]), inputs[0]);
  EXPECT_EQ(function.at(inputs[1]), inputs[1]);
}

TEST(ExecModeFunctionTest, CorrectFermatOn21) {
  Program program = ParseProgram(ReadFixture("fermat/correct.imp"));
  std::vector<State> inputs{State{{21, 0, 0}}};
  auto function = ExecModeFunction(program, inputs, 10000);
  ASSERT_EQ(function.size(), 1u);
  EXPECT_EQ(function.begin()->second.slots,
            (std::vector<std::int64_t>{21, 5, 2}));
}

TEST(ExecModeFunctionTest, DivergentIsEmpty) {
  Program program = ParseProgram("int x; while (x == x) { x = x; }");
  std::vector<State> inputs{State{{1}}, State{{2}}};
  EXPECT_TRUE(ExecModeFunction(program, inputs, 50).empty());
}

TEST(DenoteTest, SkipAndAbort) {
  Program skip = ParseProgram("int<0..4> x; int<-1..1> y; skip;");
  Relation identity = Build(MakeSpace(skip.space.vars()), BuildKind::kIdentity);
  EXPECT_EQ(Denote(skip), identity);
  Program abort = ParseProgram("int<0..4> x; int<-1..1> y; abort;");
  EXPECT_TRUE(Denote(abort).empty());
}

TEST(DenoteTest, ArraySumFunction) {
  Program program = ParseProgram(ReadFixture("arraysum/p.imp"));
  Relation function = Denote(program);
  // Brute force: a' = a, i' = N, x' = a[0] + a[1] + a[2].
  const StateSpace& space = program.space;
  std::vector<Relation::Pair> expected;
  for (StateIndex from = 0; from < *space.size(); ++from) {
    State s = space.StateAt(from);
    State out = s;
    out.slots[4] = s.slots[0] + s.slots[1] + s.slots[2];
    out.slots[5] = 3;
    expected.emplace_back(from, space.IndexOf(out));
  }
  EXPECT_EQ(function, Relation(function.space_ptr(), expected));
}

TEST(DenoteTest, LoopLeavingIntervalIsUndefined) {
  // x climbs past its interval for odd starts.
  Program program =
      ParseProgram("int<0..5> x; while (x != 4) { x = x + 2; }");
  Relation function = Denote(program);
  for (std::int64_t x = 0; x <= 5; ++x) {
    StateIndex s = program.space.IndexOf(State{{x}});
    if (x % 2 == 0 && x <= 4) {
      EXPECT_TRUE(function.Contains(s, program.space.IndexOf(State{{4}})));
    } else {
      EXPECT_TRUE(function.Images(s).empty()) << x;
    }
  }
}

TEST(DenoteTest, BlockProjectsLocal) {
  Program program = ParseProgram(
      "int<0..3> x; int<0..3> y;"
      "{ int<0..3> t; t = x; x = y; y = t; }");
  Relation function = Denote(program);
  EXPECT_TRUE(IsDeterministic(function));
  for (StateIndex s = 0; s < 16; ++s) {
    State in = program.space.StateAt(s);
    State out{{in.slots[1], in.slots[0]}};
    auto images = function.Images(s);
    ASSERT_EQ(images.size(), 1u);
    EXPECT_EQ(images[0].second, program.space.IndexOf(out));
  }
}

TEST(DenoteTest, UninitializedLocalReadIsNondeterministic) {
  Program program = ParseProgram("int<0..1> x; { int<0..1> t; x = t; }");
  Relation function = Denote(program);
  EXPECT_FALSE(IsDeterministic(function));
  EXPECT_EQ(function.size(), 4u);
}

TEST(DenoteTest, CapacityGuard) {
  Program program = ParseProgram("int x; skip;");
  EXPECT_THROW(Denote(program), CapacityError);
  Limits tight{100};
  Program small = ParseProgram("int<0..200> x; skip;");
  EXPECT_THROW(Denote(small, tight), CapacityError);
}

}  // namespace
}  // namespace relcor
