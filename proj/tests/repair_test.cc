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
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "relcor/errors.h"
#include "relcor/parser.h"
#include "relcor/repair.h"
#include "relcor/semantics.h"
#include "support/random_models.h"

namespace relcor {
namespace {

std::string ReadFixture(const std::string& path) {
  std::ifstream in(std::string(RELCOR_DATA_DIR) + "/studies/" + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Spec LoadSpec(const std::string& path) {
  return SpecFromJson(Json::parse(ReadFixture(path)));
}

RepairConfig FermatConfig() {
  RepairConfig config;
  config.selection.strategy = Selection::kExhaustive;
  config.run.fuel = 10000;
  config.run.mode = EvalMode::kMachine;
  return config;
}

class FermatRepairTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    spec_ = new Spec(LoadSpec("fermat/spec.json"));
    base_ = new Program(ParseProgram(ReadFixture("fermat/basep.imp")));
    tree_ = new RepairTree(Repair(*base_, *spec_, FermatConfig()));
  }
  static void TearDownTestSuite() {
    delete tree_;
    delete base_;
    delete spec_;
  }

  static Spec* spec_;
  static Program* base_;
  static RepairTree* tree_;
};

Spec* FermatRepairTest::spec_ = nullptr;
Program* FermatRepairTest::base_ = nullptr;
RepairTree* FermatRepairTest::tree_ = nullptr;

TEST_F(FermatRepairTest, FirstLevel) {
  const RepairNode& root = tree_->root();
  EXPECT_EQ(tree_->suite_size, 75u);
  ASSERT_EQ(root.mutants.size(), 48u);
  std::size_t strict = 0, absolute = 0;
  for (const MutantResult& m : root.mutants) {
    if (m.verdict.classification == Classification::kStrictlyMoreCorrect) {
      ++strict;
    }
    if (m.verdict.classification == Classification::kAbsolutelyCorrect) {
      ++absolute;
    }
    EXPECT_EQ(m.verdict.n0 + m.verdict.n1 + m.verdict.n2 + m.verdict.n3, 75u);
  }
  EXPECT_EQ(absolute, 0u);
  EXPECT_GE(strict, 2u);
  EXPECT_GE(tree_->metrics.fault_density_lb, 2u);
}

TEST_F(FermatRepairTest, SolutionAtDepthThree) {
  ASSERT_EQ(tree_->solutions.size(), 1u);
  const RepairNode& solution = tree_->nodes[tree_->solutions[0]];
  EXPECT_EQ(solution.depth, 3u);
  EXPECT_EQ(tree_->metrics.fault_depth_ub, std::optional<std::size_t>(3));

  // The solution computes the same function as the shipped correct program
  // on every suite input.
  Program correct = ParseProgram(ReadFixture("fermat/correct.imp"));
  SelectionParams params;
  TestSuite suite = SelectTests(*spec_, nullptr, params);
  for (const State& input : suite.inputs) {
    ExecOutcome expected = Execute(correct, input, 10000, EvalMode::kMachine);
    ExecOutcome actual =
        Execute(solution.program, input, 10000, EvalMode::kMachine);
    ASSERT_TRUE(expected.is_final());
    ASSERT_TRUE(actual.is_final());
    EXPECT_EQ(actual.final_state, expected.final_state);
  }
}

TEST_F(FermatRepairTest, SomeFirstLevelBranchIsDeadEnd) {
  bool found = false;
  for (std::size_t id : tree_->dead_ends) {
    if (tree_->nodes[id].depth == 1) found = true;
  }
  EXPECT_TRUE(found);
}

TEST_F(FermatRepairTest, TreeShape) {
  for (const RepairNode& node : tree_->nodes) {
    if (!node.parent) continue;
    const RepairNode& parent = tree_->nodes[*node.parent];
    EXPECT_EQ(node.depth, parent.depth + 1);
    EXPECT_EQ(node.label,
              parent.label + "." + std::to_string(node.ordinal));
    EXPECT_NE(parent.status, NodeStatus::kUnexpanded);
  }
  std::set<std::string> fingerprints;
  for (const RepairNode& node : tree_->nodes) {
    EXPECT_TRUE(fingerprints.insert(node.fingerprint).second) << node.label;
  }
}

TEST_F(FermatRepairTest, JsonRoundTrip) {
  Json json = RepairTreeToJson(*tree_);
  RepairTree again = RepairTreeFromJson(json);
  EXPECT_EQ(RepairTreeToJson(again).dump(), json.dump());
  EXPECT_EQ(RepairTreeToDot(again), RepairTreeToDot(*tree_));
}

TEST_F(FermatRepairTest, Reproducible) {
  RepairConfig config = FermatConfig();
  config.threads = 1;
  RepairTree again = Repair(*base_, *spec_, config);
  EXPECT_EQ(RepairTreeToJson(again).dump(), RepairTreeToJson(*tree_).dump());
}

TEST(RepairTest, CorrectBaseIsItsOwnSolution) {
  Spec spec = LoadSpec("fermat/spec.json");
  Program correct = ParseProgram(ReadFixture("fermat/correct.imp"));
  RepairTree tree = Repair(correct, spec, FermatConfig());
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_EQ(tree.root().status, NodeStatus::kSolution);
  EXPECT_EQ(tree.metrics.fault_depth_ub, std::optional<std::size_t>(0));
  EXPECT_EQ(tree.metrics.fault_density_lb, 0u);
  std::string dot = RepairTreeToDot(tree);
  EXPECT_NE(dot.find("n0 ["), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);

  // Nothing improves on a correct program.
  std::vector<Mutant> mutants = Generate(correct, OperatorSet{});
  std::vector<Program> programs;
  for (const Mutant& m : mutants) programs.push_back(m.program);
  SelectionParams params;
  TestSuite suite = SelectTests(spec, nullptr, params);
  for (const CandidateVerdict& v :
       ClassifyCandidates(correct, programs, spec, suite, RepairMode::kTesting,
                          RunOptions{})) {
    EXPECT_TRUE(v.classification == Classification::kAbsolutelyCorrect ||
                v.classification == Classification::kAsCorrect ||
                v.classification == Classification::kNotMoreCorrect);
    EXPECT_NE(v.classification, Classification::kStrictlyMoreCorrect);
  }
}

TEST(RepairTest, OneSeededFaultIsFoundAtDepthOne) {
  Spec spec = LoadSpec("fermat/spec.json");
  std::string source = ReadFixture("fermat/correct.imp");
  std::size_t at = source.find("y = y + 1");
  ASSERT_NE(at, std::string::npos);
  source.replace(at, 9, "y = y * 1");
  RepairTree tree = Repair(ParseProgram(source), spec, FermatConfig());
  ASSERT_EQ(tree.solutions.size(), 1u);
  const RepairNode& solution = tree.nodes[tree.solutions[0]];
  EXPECT_EQ(solution.depth, 1u);
  EXPECT_EQ(tree.metrics.fault_depth_ub, std::optional<std::size_t>(1));
  EXPECT_NE(ToSource(solution.program).find("y = y + 1"), std::string::npos);
}

Program ArraySum() { return ParseProgram(ReadFixture("arraysum/p.imp")); }

Patch ArraySumPatch(const std::string& name, const Program& program) {
  return PatchFromJson(Json::parse(ReadFixture("arraysum/patches.json"))[name],
                       program);
}

TEST(VerifyFaultTest, ArraySum) {
  Program base = ArraySum();
  Spec spec = LoadSpec("arraysum/spec.json");

  FaultCheck s1 = VerifyFault(base, ArraySumPatch("s1", base), spec);
  EXPECT_TRUE(s1.is_fault_removal);
  // Competence domain of the base: a[0] = a[N], any x and i.
  const StateSpace& space = spec.space();
  std::size_t expected = 0;
  for (StateIndex s = 0; s < *space.size(); ++s) {
    State state = space.StateAt(s);
    bool in = state.slots[0] == state.slots[3];
    EXPECT_EQ(s1.cd_before.Contains(s), in);
    expected += in;
  }
  EXPECT_EQ(s1.cd_before.size(), expected);
  EXPECT_EQ(s1.cd_after.size(), *space.size());

  EXPECT_TRUE(VerifyFault(base, ArraySumPatch("s2", base), spec)
                  .is_fault_removal);
  EXPECT_FALSE(VerifyFault(base, ArraySumPatch("init_only", base), spec)
                   .is_fault_removal);
  EXPECT_FALSE(VerifyFault(base, ArraySumPatch("guard_only", base), spec)
                   .is_fault_removal);
}

TEST(ClassifyCandidatesTest, ArraySumPatchPool) {
  Program base = ArraySum();
  Spec spec = LoadSpec("arraysum/spec.json");
  std::vector<Program> pool{ApplyPatch(base, ArraySumPatch("s1", base)),
                            ApplyPatch(base, ArraySumPatch("s2", base))};
  std::vector<CandidateVerdict> verdicts = ClassifyCandidates(
      base, pool, spec, TestSuite{}, RepairMode::kExact, RunOptions{});
  ASSERT_EQ(verdicts.size(), 2u);
  // Both reach the whole domain, which is strictly more than the base.
  for (const CandidateVerdict& v : verdicts) {
    EXPECT_EQ(v.classification, Classification::kAbsolutelyCorrect);
  }
}

TEST(ClassifyCandidatesTest, ExactModeCapacity) {
  Spec spec = LoadSpec("fermat/spec.json");
  Program base = ParseProgram(ReadFixture("fermat/basep.imp"));
  std::vector<Program> pool{base};
  EXPECT_THROW(ClassifyCandidates(base, pool, spec, TestSuite{},
                                  RepairMode::kExact, RunOptions{}),
               CapacityError);
  EXPECT_THROW(ClassifyCandidates(base, pool, spec, TestSuite{},
                                  RepairMode::kTesting, RunOptions{}),
               EmptySuiteError);
}

// In exact mode every step strictly enlarges the competence domain.
TEST(RepairPropertyTest, CompetenceGrowsAlongPaths) {
  testing_support::Rng rng(77);
  testing_support::ProgramShape shape;
  shape.max_states = 60;
  shape.max_depth = 2;
  std::size_t checked_steps = 0;
  for (int k = 0; k < 120; ++k) {
    Program base = testing_support::RandomProgram(rng, shape);
    Spec spec = testing_support::RandomSpec(base.space, rng);
    RepairConfig config;
    config.mode = RepairMode::kExact;
    config.operators = OperatorSet{true, true, false};
    config.max_depth = 3;
    config.max_frontier = 8;
    RepairTree tree = Repair(base, spec, config);
    Relation spec_relation = spec.Enumerate();
    for (const RepairNode& node : tree.nodes) {
      if (node.status == NodeStatus::kSolution) {
        EXPECT_TRUE(IsCorrect(Denote(node.program), spec_relation));
      }
      if (!node.parent) continue;
      StateSet before = CompetenceDomain(
          spec_relation, Denote(tree.nodes[*node.parent].program));
      StateSet after = CompetenceDomain(spec_relation, Denote(node.program));
      EXPECT_TRUE(before.IsSubsetOf(after));
      EXPECT_LT(before.size(), after.size());
      ++checked_steps;
    }
  }
  EXPECT_GT(checked_steps, 10u);
}

TEST(RepairTest, RejectsBadConfig) {
  Spec spec = LoadSpec("fermat/spec.json");
  RepairConfig config = FermatConfig();
  config.max_depth = 0;
  EXPECT_THROW(Repair(ArraySum(), spec, config), ModelError);
  EXPECT_THROW(RepairModeFromString("fast"), ModelError);
  EXPECT_THROW(RepairTreeFromJson(Json::parse("{}")), ModelError);
}

}  // namespace
}  // namespace relcor
