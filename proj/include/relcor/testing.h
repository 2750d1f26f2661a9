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


// Test selection, suite execution against a base program, and the
// testing-based classification of a candidate.

#ifndef RELCOR_TESTING_H
#define RELCOR_TESTING_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relcor/ast.h"
#include "relcor/interpreter.h"
#include "relcor/relation_json.h"
#include "relcor/spec.h"

namespace relcor {

enum class Selection { kExhaustive, kRandom, kCompetenceDomainOfBase, kFile };

const char* ToString(Selection selection);
Selection SelectionFromString(const std::string& text);

struct SelectionParams {
  Selection strategy = Selection::kExhaustive;
  std::uint64_t seed = 0;
  // kRandom: number of distinct inputs to draw. kCompetenceDomainOfBase:
  // sample size, 0 for the whole competence domain.
  std::size_t count = 0;
  std::string path;  // kFile
  // Fix variables the specification never reads in the input state to the
  // value closest to zero instead of ranging over them.
  bool pin_unconstrained = true;
  Limits limits;
};

struct TestSuite {
  std::vector<State> inputs;
  SelectionParams params;
};

// Throws EmptySuiteError when no input qualifies.
TestSuite SelectTests(const Spec& spec, const Program* base,
                      const SelectionParams& params);

// One input per line, `name=value` pairs separated by blanks; arrays as
// `a=[1,2,0,2]`. Blank lines and `#` comments are ignored.
std::vector<State> ParseTestFile(const StateSpace& space, std::string_view text);
std::string FormatTestFile(const StateSpace& space,
                           std::span<const State> inputs);

// Passes unless the base passes and the candidate fails.
OracleVerdict RelOracle(const Spec& spec, const ExecOutcome& base_outcome,
                        const State& input, const ExecOutcome& candidate_outcome);

struct TestRecord {
  State input;
  ExecOutcome base_outcome;
  ExecOutcome candidate_outcome;
  OracleVerdict base;
  OracleVerdict candidate;
};

struct SuiteReport {
  bool cumulabs = true;
  bool cumulrel = true;
  bool cumulstrict = false;
  std::size_t n0 = 0;  // both pass
  std::size_t n1 = 0;  // base fails, candidate passes
  std::size_t n2 = 0;  // both fail
  std::size_t n3 = 0;  // base passes, candidate fails
  std::vector<TestRecord> records;
};

enum class Classification {
  kAbsolutelyCorrect,
  kStrictlyMoreCorrect,
  kAsCorrect,
  kNotMoreCorrect,
};

const char* ToString(Classification classification);
Classification ClassificationFromString(const std::string& text);

Classification Classify(const SuiteReport& report);

struct RunOptions {
  std::uint64_t fuel = 10000;
  EvalMode mode = EvalMode::kMachine;
};

// Throws SpaceMismatchError unless both programs are laid out like the
// specification's space.
SuiteReport RunSuite(const Program& candidate, const Program& base,
                     const Spec& spec, const TestSuite& suite,
                     const RunOptions& options);

// Base outcomes computed once and reused across candidates.
struct BaselineRun {
  std::vector<ExecOutcome> outcomes;
  std::vector<OracleVerdict> verdicts;
};

BaselineRun RunBaseline(const Executable& base, const Spec& spec,
                        const TestSuite& suite, const RunOptions& options);
SuiteReport RunAgainstBaseline(const Executable& candidate,
                               const BaselineRun& baseline, const Spec& spec,
                               const TestSuite& suite,
                               const RunOptions& options);

Json SelectionToJson(const SelectionParams& params, std::size_t size);
Json SuiteReportToJson(const SuiteReport& report, const StateSpace& space);
Json OutcomeToJson(const ExecOutcome& outcome, const StateSpace& space);

}  // namespace relcor

#endif  // RELCOR_TESTING_H
