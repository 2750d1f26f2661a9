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


// Small-budget runs of the randomized property checks. The acceptance
// binary runs the same checks at full size.

#include "gtest/gtest.h"
#include "support/properties.h"

namespace relcor::testing_support {
namespace {

constexpr std::uint64_t kSeed = 20261017;

void Expect(const PropertyOutcome& outcome) {
  EXPECT_TRUE(outcome.ok()) << outcome.counterexamples << " of "
                            << outcome.cases << " failed; first:\n"
                            << outcome.first_failure;
}

TEST(RelationProperties, RefinementIsPartialOrder) {
  Expect(RefinementIsPartialOrder(kSeed, 200));
}
TEST(RelationProperties, RefinesIffCompetenceCoversDomain) {
  Expect(RefinesIffCompetenceCoversDomain(kSeed, 200));
}
TEST(RelationProperties, MoreCorrectIsPreorder) {
  Expect(MoreCorrectIsPreorder(kSeed, 100));
}
TEST(RelationProperties, CorrectIsMoreCorrectThanAll) {
  Expect(CorrectIsMoreCorrectThanAll(kSeed, 100));
}
TEST(RelationProperties, CompetenceWithinDomain) {
  Expect(CompetenceWithinDomain(kSeed, 100));
}
TEST(RelationProperties, ClosureIsUnionOfPowers) {
  Expect(ClosureIsUnionOfPowers(kSeed, 100));
}
TEST(SemanticsProperties, DenoteAgreesWithExecute) {
  Expect(DenoteAgreesWithExecute(kSeed, 40));
}
TEST(SemanticsProperties, SequenceLaw) { Expect(SequenceLaw(kSeed, 30)); }
TEST(SemanticsProperties, ConditionalLaw) { Expect(ConditionalLaw(kSeed, 30)); }
TEST(SemanticsProperties, SourceRoundTrip) { Expect(SourceRoundTrip(kSeed, 60)); }
TEST(TestingProperties, TestingAgreesWithExact) {
  Expect(TestingAgreesWithExact(kSeed, 30));
}
TEST(MutationProperties, MutantsDifferAtOneSite) {
  Expect(MutantsDifferAtOneSite(kSeed, 40));
}

}  // namespace
}  // namespace relcor::testing_support
