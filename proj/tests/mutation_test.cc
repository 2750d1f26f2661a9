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
#include "relcor/mutation.h"
#include "relcor/parser.h"
#include "relcor/semantics.h"
#include "relcor/spec.h"

namespace relcor {
namespace {

std::string ReadFixture(const std::string& path) {
  std::ifstream in(std::string(RELCOR_DATA_DIR) + "/studies/" + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Program ArraySum() { return ParseProgram(ReadFixture("arraysum/p.imp")); }

Patch ArraySumPatch(const std::string& name, const Program& program) {
  return PatchFromJson(Json::parse(ReadFixture("arraysum/patches.json"))[name],
                       program);
}

bool CorrectForArraySum(const Program& program) {
  Spec spec = SpecFromJson(Json::parse(ReadFixture("arraysum/spec.json")));
  return IsCorrect(Denote(program), spec.Enumerate());
}

TEST(SitesTest, FermatOperators) {
  Program base = ParseProgram(ReadFixture("fermat/basep.imp"));
  const SiteKind binary[] = {SiteKind::kBinaryArithOp};
  EXPECT_EQ(Sites(base, binary).size(), 12u);
  std::vector<Mutant> mutants = Generate(base, OperatorSet{});
  ASSERT_EQ(mutants.size(), 48u);
  for (std::size_t k = 0; k < mutants.size(); ++k) {
    EXPECT_EQ(mutants[k].ordinal, k + 1);
    EXPECT_EQ(mutants[k].op, "AORB");
  }
  EXPECT_EQ(mutants[0].statement, "r = r + 2 * x + 1;");
}

TEST(GenerateTest, SingleAssignment) {
  Program program = ParseProgram("int<0..3> x; x = x + 1;");
  std::vector<Mutant> mutants = Generate(program, OperatorSet{});
  ASSERT_EQ(mutants.size(), 4u);
  std::vector<std::string> bodies;
  for (const Mutant& m : mutants) bodies.push_back(ToSource(*m.program.body));
  EXPECT_EQ(bodies, (std::vector<std::string>{"x = x - 1;\n", "x = x * 1;\n",
                                              "x = x / 1;\n", "x = x % 1;\n"}));
  EXPECT_EQ(mutants[1].statement, "x = x * 1;");
}

TEST(GenerateTest, LiteralAndIndexOperators) {
  Program program = ArraySum();
  OperatorSet ops = OperatorSet::Parse("literal,index");
  EXPECT_FALSE(ops.aorb);
  std::vector<Mutant> mutants = Generate(program, ops);
  // Literals 0, 0, N, 1 and the single index i.
  ASSERT_EQ(mutants.size(), 10u);
  EXPECT_EQ(mutants[4].op, "LIT+1");
  EXPECT_EQ(mutants[4].site.path, 3u);
  EXPECT_EQ(ToSource(*mutants[4].replacement), "4");
  EXPECT_EQ(mutants[6].op, "IDX+1");
  EXPECT_EQ(ToSource(*mutants[6].replacement), "i + 1");
  EXPECT_EQ(mutants[7].op, "IDX-1");
  EXPECT_EQ(OperatorSet::Parse("aorb,literal,index").ToString(),
            "aorb,literal,index");
  EXPECT_THROW(OperatorSet::Parse("swap"), ModelError);
}

TEST(PatchTest, ArraySumSubstitutions) {
  Program program = ArraySum();
  Program s1 = ApplyPatch(program, ArraySumPatch("s1", program));
  Program s2 = ApplyPatch(program, ArraySumPatch("s2", program));
  EXPECT_TRUE(StructurallyEqual(
      s1, ParseProgram("const N = 3; int<0..2> a[N+1]; int<0..6> x = 0; "
                       "int<0..4> i = 1; while (i < N + 1) "
                       "{ x = x + a[i]; i = i + 1; }")));
  EXPECT_TRUE(StructurallyEqual(
      s2, ParseProgram("const N = 3; int<0..2> a[N+1]; int<0..6> x = 0; "
                       "int<0..4> i = 0; while (i < N) "
                       "{ x = x + a[i + 1]; i = i + 1; }")));
  EXPECT_FALSE(CorrectForArraySum(program));
  EXPECT_TRUE(CorrectForArraySum(s1));
  EXPECT_TRUE(CorrectForArraySum(s2));
  EXPECT_FALSE(CorrectForArraySum(
      ApplyPatch(program, ArraySumPatch("init_only", program))));
  EXPECT_FALSE(CorrectForArraySum(
      ApplyPatch(program, ArraySumPatch("guard_only", program))));

  // Both repairs at once step past the end of the array.
  Patch both = ArraySumPatch("s1", program);
  for (auto& item : ArraySumPatch("s2", program).substitutions) {
    both.substitutions.push_back(item);
  }
  EXPECT_FALSE(CorrectForArraySum(ApplyPatch(program, both)));
}

TEST(PatchTest, EmptyPatchIsIdentity) {
  Program program = ArraySum();
  Program same = ApplyPatch(program, Patch{});
  EXPECT_EQ(same.body, program.body);
}

TEST(PatchTest, SharesUntouchedSubtrees) {
  Program program = ArraySum();
  Program s2 = ApplyPatch(program, ArraySumPatch("s2", program));
  EXPECT_EQ(s2.body->first, program.body->first);
}

TEST(PatchTest, Errors) {
  Program program = ArraySum();
  Patch missing{{{{99, SiteKind::kIntegerLiteral}, ast::Lit(1)}}};
  EXPECT_THROW(ApplyPatch(program, missing), ModelError);
  Patch wrong_kind{{{{1, SiteKind::kBinaryArithOp}, ast::Lit(1)}}};
  EXPECT_THROW(ApplyPatch(program, wrong_kind), ModelError);
  Patch twice{{{{1, SiteKind::kIntegerLiteral}, ast::Lit(1)},
               {{1, SiteKind::kIntegerLiteral}, ast::Lit(2)}}};
  EXPECT_THROW(ApplyPatch(program, twice), ModelError);
  // Node 4 is x + a[i]; node 7 sits inside it.
  Patch overlap{{{{4, SiteKind::kBinaryArithOp}, ast::Lit(1)},
                 {{7, SiteKind::kArrayIndex}, ast::Lit(1)}}};
  EXPECT_THROW(ApplyPatch(program, overlap), ModelError);

  Json stale = Json::parse(R"({"substitutions": [
      {"path": 1, "kind": "integer-literal", "original": "7",
       "replacement": "1"}]})");
  EXPECT_THROW(PatchFromJson(stale, program), ModelError);
  Json unknown = Json::parse(R"({"substitutions": [
      {"path": 1, "kind": "integer-literal", "replacement": "q + 1"}]})");
  EXPECT_THROW(PatchFromJson(unknown, program), Error);
  EXPECT_THROW(PatchFromJson(Json::object(), program), ModelError);
}

TEST(PatchTest, JsonRoundTrip) {
  Program program = ArraySum();
  Patch s1 = ArraySumPatch("s1", program);
  Json json = PatchToJson(s1, program);
  EXPECT_EQ(json["substitutions"][1]["original"], "N");
  EXPECT_EQ(json["substitutions"][1]["replacement"], "N + 1");
  Patch again = PatchFromJson(json, program);
  EXPECT_EQ(ToSource(ApplyPatch(program, again)),
            ToSource(ApplyPatch(program, s1)));
}

TEST(FingerprintTest, SeparatesBehaviours) {
  Program base = ParseProgram(ReadFixture("fermat/basep.imp"));
  Spec spec = SpecFromJson(Json::parse(ReadFixture("fermat/spec.json")));
  std::vector<State> probe;
  for (std::int64_t n = 1; n <= 20; ++n) probe.push_back(State{{n, 0, 0}});
  std::string a = SemanticFingerprint(base, probe, 10000, EvalMode::kMachine);
  EXPECT_EQ(a.size(), 16u);
  EXPECT_EQ(a, SemanticFingerprint(base, probe, 10000, EvalMode::kMachine));

  std::set<std::string> distinct;
  for (const Mutant& m : Generate(base, OperatorSet{})) {
    distinct.insert(
        SemanticFingerprint(m.program, probe, 10000, EvalMode::kMachine));
  }
  EXPECT_GT(distinct.size(), 10u);

  // Renaming a temporary does not change behaviour.
  std::string renamed = ReadFixture("fermat/basep.imp");
  for (std::size_t at; (at = renamed.find("rsave")) != std::string::npos;) {
    renamed.replace(at, 5, "keep");
  }
  EXPECT_EQ(a, SemanticFingerprint(ParseProgram(renamed), probe, 10000,
                                   EvalMode::kMachine));
}

TEST(MutantJsonTest, Manifest) {
  Program program = ParseProgram("int<0..3> x; x = x + 1;");
  std::vector<Mutant> mutants = Generate(program, OperatorSet{});
  Json manifest = MutantManifest(mutants);
  ASSERT_EQ(manifest.size(), 4u);
  EXPECT_EQ(manifest[0]["ordinal"], 1);
  EXPECT_EQ(manifest[0]["site"]["kind"], "binary-arith-op");
  EXPECT_EQ(manifest[0]["replacement"], "x - 1");
}

}  // namespace
}  // namespace relcor
