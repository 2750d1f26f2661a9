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
#include "relcor/parser.h"
#include "relcor/testing.h"

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

std::string ReplaceOnce(std::string text, const std::string& from,
                        const std::string& to) {
  auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

TestSuite FermatSuite(const Spec& spec) {
  SelectionParams params;
  params.strategy = Selection::kExhaustive;
  return SelectTests(spec, nullptr, params);
}

TEST(RelOracleTest, Cells) {
  Spec spec = LoadSpec("fermat/spec.json");
  State input{{21, 0, 0}};
  ExecOutcome good = ExecOutcome::Final(State{{21, 5, 2}});
  ExecOutcome bad = ExecOutcome::NonTermination();
  EXPECT_TRUE(RelOracle(spec, bad, input, bad).passed);
  EXPECT_TRUE(RelOracle(spec, bad, input, good).passed);
  EXPECT_TRUE(RelOracle(spec, good, input, good).passed);
  EXPECT_FALSE(RelOracle(spec, good, input, bad).passed);
}

TEST(SelectTestsTest, FermatRandom) {
  Spec spec = LoadSpec("fermat/spec.json");
  SelectionParams params;
  params.strategy = Selection::kRandom;
  params.seed = 42;
  params.count = 50;
  TestSuite suite = SelectTests(spec, nullptr, params);
  ASSERT_EQ(suite.inputs.size(), 50u);
  std::set<std::int64_t> seen;
  for (const State& input : suite.inputs) {
    std::int64_t n = input.slots[0];
    EXPECT_TRUE(n >= 1 && n <= 100);
    EXPECT_TRUE(n % 2 == 1 || n % 4 == 0) << n;
    EXPECT_EQ(input.slots[1], 0);
    EXPECT_EQ(input.slots[2], 0);
    seen.insert(n);
  }
  EXPECT_EQ(seen.size(), 50u);
  TestSuite again = SelectTests(spec, nullptr, params);
  EXPECT_EQ(again.inputs, suite.inputs);
  params.seed = 43;
  EXPECT_NE(SelectTests(spec, nullptr, params).inputs, suite.inputs);
}

TEST(SelectTestsTest, FermatExhaustive) {
  Spec spec = LoadSpec("fermat/spec.json");
  TestSuite suite = FermatSuite(spec);
  // Odd numbers (50) and multiples of four (25) in 1..100.
  EXPECT_EQ(suite.inputs.size(), 75u);
}

TEST(SelectTestsTest, LatticeExhaustive) {
  Spec spec = LoadSpec("lattice/spec.json");
  SelectionParams params;
  TestSuite suite = SelectTests(spec, nullptr, params);
  EXPECT_EQ(suite.inputs,
            (std::vector<State>{State{{0}}, State{{1}}, State{{2}}}));
}

TEST(SelectTestsTest, ArraySumCompetenceDomain) {
  Spec spec = LoadSpec("arraysum/spec.json");
  Program base = ParseProgram(ReadFixture("arraysum/p.imp"));
  SelectionParams params;
  params.strategy = Selection::kCompetenceDomainOfBase;
  TestSuite suite = SelectTests(spec, &base, params);
  // a[0] = a[3]: 3 * 3 * 3 arrays times 7 * 5 values of x and i.
  EXPECT_EQ(suite.inputs.size(), 27u * 35u);
  for (const State& input : suite.inputs) {
    EXPECT_EQ(input.slots[0], input.slots[3]);
  }
  EXPECT_THROW(SelectTests(spec, nullptr, params), ModelError);
}

TEST(SelectTestsTest, EmptyPool) {
  Spec spec = Spec::Predicate(StateSpace({VarDecl{"x", 0, 3}}), "x > 7", "true");
  SelectionParams params;
  EXPECT_THROW(SelectTests(spec, nullptr, params), EmptySuiteError);
  params.strategy = Selection::kRandom;
  params.count = 5;
  EXPECT_THROW(SelectTests(spec, nullptr, params), EmptySuiteError);
}

TEST(TestFileTest, RoundTrip) {
  StateSpace space({VarDecl{"a", 0, 2, 4}, VarDecl{"x", 0, 6}});
  std::vector<State> inputs = ParseTestFile(space,
                                            "# comment\n"
                                            "a=[1,2,0,2] x=3\n"
                                            "\n"
                                            "x=1   # a stays zero\n");
  ASSERT_EQ(inputs.size(), 2u);
  EXPECT_EQ(inputs[0].slots, (std::vector<std::int64_t>{1, 2, 0, 2, 3}));
  EXPECT_EQ(inputs[1].slots, (std::vector<std::int64_t>{0, 0, 0, 0, 1}));
  EXPECT_EQ(ParseTestFile(space, FormatTestFile(space, inputs)), inputs);
  EXPECT_THROW(ParseTestFile(space, "x=9"), ModelError);
  EXPECT_THROW(ParseTestFile(space, "z=1"), ModelError);
  EXPECT_THROW(ParseTestFile(space, "a=[1,2]"), ModelError);
  EXPECT_THROW(ParseTestFile(space, "x"), ModelError);
}

TEST(RunSuiteTest, SelfComparison) {
  Spec spec = LoadSpec("fermat/spec.json");
  Program base = ParseProgram(ReadFixture("fermat/basep.imp"));
  TestSuite suite = FermatSuite(spec);
  SuiteReport report = RunSuite(base, base, spec, suite, {});
  EXPECT_TRUE(report.cumulrel);
  EXPECT_FALSE(report.cumulstrict);
  EXPECT_EQ(report.n1, 0u);
  EXPECT_EQ(report.n3, 0u);
  EXPECT_EQ(report.n0 + report.n2, suite.inputs.size());
}

TEST(RunSuiteTest, DivergentBaseAgainstCorrect) {
  Spec spec = LoadSpec("fermat/spec.json");
  Program base = ParseProgram("int n, x, y; while (true) { skip; }");
  Program correct = ParseProgram(ReadFixture("fermat/correct.imp"));
  TestSuite suite = FermatSuite(spec);
  SuiteReport report = RunSuite(correct, base, spec, suite, {});
  EXPECT_EQ(report.n0, 0u);
  EXPECT_EQ(report.n1, suite.inputs.size());
  EXPECT_TRUE(report.cumulstrict);
  EXPECT_TRUE(report.cumulabs);
  EXPECT_EQ(Classify(report), Classification::kAbsolutelyCorrect);
}

TEST(RunSuiteTest, ReversingFirstChange) {
  Spec spec = LoadSpec("fermat/spec.json");
  std::string source = ReadFixture("fermat/basep.imp");
  Program base = ParseProgram(source);
  Program candidate = ParseProgram(
      ReplaceOnce(source, "r = r + 2 * x - 1", "r = r + 2 * x + 1"));
  SuiteReport report = RunSuite(candidate, base, spec, FermatSuite(spec), {});
  EXPECT_TRUE(report.cumulrel);
  EXPECT_TRUE(report.cumulstrict);
  EXPECT_EQ(Classify(report), Classification::kStrictlyMoreCorrect);
}

TEST(RunSuiteTest, SpaceMismatch) {
  Spec spec = LoadSpec("fermat/spec.json");
  Program other = ParseProgram("int n, x; skip;");
  TestSuite suite = FermatSuite(spec);
  EXPECT_THROW(RunSuite(other, other, spec, suite, {}), SpaceMismatchError);
}

TEST(ClassifyTest, Cases) {
  SuiteReport report;
  EXPECT_EQ(Classify(report), Classification::kAbsolutelyCorrect);
  report.cumulabs = false;
  report.cumulstrict = true;
  report.n1 = 3;
  EXPECT_EQ(Classify(report), Classification::kStrictlyMoreCorrect);
  report.cumulstrict = false;
  EXPECT_EQ(Classify(report), Classification::kAsCorrect);
  report.cumulrel = false;
  EXPECT_EQ(Classify(report), Classification::kNotMoreCorrect);
  for (Classification c :
       {Classification::kAbsolutelyCorrect, Classification::kStrictlyMoreCorrect,
        Classification::kAsCorrect, Classification::kNotMoreCorrect}) {
    EXPECT_EQ(ClassificationFromString(ToString(c)), c);
  }
}

TEST(SuiteReportTest, CountsAndDeterminism) {
  Spec spec = LoadSpec("fermat/spec.json");
  std::string source = ReadFixture("fermat/basep.imp");
  Program base = ParseProgram(source);
  Program candidate = ParseProgram(
      ReplaceOnce(source, "r = r - 2 * y + 1", "r = r - 2 * y - 1"));
  SelectionParams params;
  params.strategy = Selection::kRandom;
  params.seed = 7;
  params.count = 30;
  TestSuite suite = SelectTests(spec, nullptr, params);
  SuiteReport report = RunSuite(candidate, base, spec, suite, {});
  EXPECT_EQ(report.n0 + report.n1 + report.n2 + report.n3, 30u);
  EXPECT_EQ(report.cumulrel, report.n3 == 0);
  EXPECT_EQ(report.cumulstrict, report.n1 >= 1);
  std::string first = SuiteReportToJson(report, spec.space()).dump();
  SuiteReport again =
      RunSuite(candidate, base, spec, SelectTests(spec, nullptr, params), {});
  EXPECT_EQ(SuiteReportToJson(again, spec.space()).dump(), first);
}

}  // namespace
}  // namespace relcor
