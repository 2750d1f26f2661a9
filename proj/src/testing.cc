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


#include "relcor/testing.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "relcor/errors.h"
#include "relcor/semantics.h"

namespace relcor {

namespace {

// Uniform draw from [0, bound) by rejection. std::uniform_int_distribution
// is avoided on purpose: its output differs between standard libraries.
std::uint64_t Bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

// The variables that are enumerated or sampled; the others stay pinned.
struct InputPool {
  StateSpace sub;
  std::vector<std::size_t> vars;  // indices into the full space
  State pinned;
};

InputPool MakePool(const Spec& spec, bool pin) {
  const StateSpace& space = spec.space();
  std::set<std::string> unconstrained;
  if (pin) {
    for (const std::string& name : spec.UnconstrainedVars()) {
      unconstrained.insert(name);
    }
  }
  InputPool pool;
  std::vector<VarDecl> decls;
  for (std::size_t i = 0; i < space.vars().size(); ++i) {
    if (unconstrained.count(space.vars()[i].name)) continue;
    pool.vars.push_back(i);
    decls.push_back(space.vars()[i]);
  }
  pool.sub = StateSpace(std::move(decls));
  pool.pinned = space.ZeroState();
  return pool;
}

State Embed(const InputPool& pool, const StateSpace& space, StateIndex index) {
  State out = pool.pinned;
  State part = pool.sub.StateAt(index);
  for (std::size_t k = 0; k < pool.vars.size(); ++k) {
    std::size_t var = pool.vars[k];
    std::size_t width = space.vars()[var].width();
    std::copy_n(part.slots.begin() + pool.sub.offset(k), width,
                out.slots.begin() + space.offset(var));
  }
  return out;
}

constexpr std::uint64_t kEnumerablePool = 1 << 20;

std::vector<State> SelectExhaustive(const Spec& spec,
                                    const SelectionParams& params) {
  InputPool pool = MakePool(spec, params.pin_unconstrained);
  StateIndex count = pool.sub.CheckedSize(params.limits.max_pairs);
  std::vector<State> out;
  for (StateIndex index = 0; index < count; ++index) {
    State input = Embed(pool, spec.space(), index);
    if (spec.InDom(input)) out.push_back(std::move(input));
  }
  return out;
}

std::vector<State> SampleDistinct(std::vector<State> pool, std::size_t count,
                                  std::mt19937_64& rng) {
  if (count >= pool.size()) return pool;
  // Partial Fisher-Yates: the first `count` slots end up a uniform sample.
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t pick = k + Bounded(rng, pool.size() - k);
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<State> SelectRandom(const Spec& spec,
                                const SelectionParams& params) {
  if (params.count == 0) throw ModelError("random selection needs a count");
  std::mt19937_64 rng(params.seed);
  InputPool pool = MakePool(spec, params.pin_unconstrained);
  std::optional<std::uint64_t> size = pool.sub.size();
  if (size && *size <= kEnumerablePool) {
    SelectionParams all = params;
    return SampleDistinct(SelectExhaustive(spec, all), params.count, rng);
  }
  // Rejection sampling over a pool too large to enumerate.
  std::uint64_t bound = size ? *size : UINT64_MAX;
  std::set<StateIndex> drawn;
  std::vector<State> out;
  std::uint64_t attempts = 1000 * static_cast<std::uint64_t>(params.count) + 1000;
  while (out.size() < params.count && attempts-- > 0) {
    StateIndex index = Bounded(rng, bound);
    if (!drawn.insert(index).second) continue;
    State input = Embed(pool, spec.space(), index);
    if (spec.InDom(input)) out.push_back(std::move(input));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<State> SelectCompetenceDomain(const Spec& spec,
                                          const Program* base,
                                          const SelectionParams& params) {
  if (!base) {
    throw ModelError("competence-domain selection needs a base program");
  }
  if (!(base->space == spec.space())) {
    throw SpaceMismatchError(
        "competence-domain selection needs the base program and the "
        "specification over the same space");
  }
  Relation spec_relation = spec.Enumerate(params.limits);
  Relation function = Denote(*base, params.limits);
  Relation aligned = FromSortedPairs(
      spec_relation.space_ptr(),
      std::vector<Relation::Pair>(function.pairs().begin(),
                                  function.pairs().end()));
  StateSet domain = CompetenceDomain(spec_relation, aligned);
  std::vector<State> pool;
  for (StateIndex index : domain.members()) {
    pool.push_back(spec.space().StateAt(index));
  }
  if (params.count == 0) return pool;
  std::mt19937_64 rng(params.seed);
  return SampleDistinct(std::move(pool), params.count, rng);
}

std::int64_t ParseValue(const VarDecl& decl, const std::string& text,
                        std::size_t line) {
  auto it = std::find(decl.labels.begin(), decl.labels.end(), text);
  if (it != decl.labels.end()) return decl.min + (it - decl.labels.begin());
  try {
    std::size_t used = 0;
    std::int64_t value = std::stoll(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw ModelError("test file line " + std::to_string(line) +
                   ": bad value '" + text + "' for '" + decl.name + "'");
}

}  // namespace

const char* ToString(Selection selection) {
  switch (selection) {
    case Selection::kExhaustive:
      return "exhaustive";
    case Selection::kRandom:
      return "random";
    case Selection::kCompetenceDomainOfBase:
      return "competence_domain_of_base";
    case Selection::kFile:
      return "file";
  }
  return "?";
}

Selection SelectionFromString(const std::string& text) {
  for (Selection s : {Selection::kExhaustive, Selection::kRandom,
                      Selection::kCompetenceDomainOfBase, Selection::kFile}) {
    if (text == ToString(s)) return s;
  }
  throw ModelError("unknown test selection '" + text + "'");
}

TestSuite SelectTests(const Spec& spec, const Program* base,
                      const SelectionParams& params) {
  TestSuite suite;
  suite.params = params;
  switch (params.strategy) {
    case Selection::kExhaustive:
      suite.inputs = SelectExhaustive(spec, params);
      break;
    case Selection::kRandom:
      suite.inputs = SelectRandom(spec, params);
      break;
    case Selection::kCompetenceDomainOfBase:
      suite.inputs = SelectCompetenceDomain(spec, base, params);
      break;
    case Selection::kFile: {
      std::ifstream in(params.path);
      if (!in) throw ModelError("cannot read test file '" + params.path + "'");
      std::stringstream text;
      text << in.rdbuf();
      suite.inputs = ParseTestFile(spec.space(), text.str());
      break;
    }
  }
  if (suite.inputs.empty()) {
    throw EmptySuiteError(std::string("no input qualifies for ") +
                          ToString(params.strategy) + " selection");
  }
  return suite;
}

std::vector<State> ParseTestFile(const StateSpace& space,
                                 std::string_view text) {
  std::vector<State> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string field;
    State state = space.ZeroState();
    bool any = false;
    while (fields >> field) {
      any = true;
      auto eq = field.find('=');
      if (eq == std::string::npos) {
        throw ModelError("test file line " + std::to_string(number) +
                         ": expected name=value, got '" + field + "'");
      }
      std::string name = field.substr(0, eq);
      std::string value = field.substr(eq + 1);
      auto var = space.Find(name);
      if (!var) {
        throw ModelError("test file line " + std::to_string(number) +
                         ": unknown variable '" + name + "'");
      }
      const VarDecl& decl = space.vars()[*var];
      std::size_t offset = space.offset(*var);
      if (decl.is_array()) {
        if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
          throw ModelError("test file line " + std::to_string(number) +
                           ": array '" + name + "' needs [v,...]");
        }
        std::istringstream items(value.substr(1, value.size() - 2));
        std::string item;
        std::size_t k = 0;
        while (std::getline(items, item, ',')) {
          if (k >= decl.length) break;
          state.slots[offset + k++] = ParseValue(decl, item, number);
        }
        if (k != decl.length || std::getline(items, item, ',')) {
          throw ModelError("test file line " + std::to_string(number) +
                           ": array '" + name + "' needs " +
                           std::to_string(decl.length) + " elements");
        }
      } else {
        state.slots[offset] = ParseValue(decl, value, number);
      }
    }
    if (!any) continue;
    if (!space.Contains(state)) {
      throw ModelError("test file line " + std::to_string(number) +
                       ": state outside the space");
    }
    out.push_back(std::move(state));
  }
  return out;
}

std::string FormatTestFile(const StateSpace& space,
                           std::span<const State> inputs) {
  std::string out;
  for (const State& state : inputs) {
    for (std::size_t i = 0; i < space.vars().size(); ++i) {
      const VarDecl& decl = space.vars()[i];
      if (i > 0) out += ' ';
      out += decl.name + '=';
      std::size_t offset = space.offset(i);
      if (decl.is_array()) {
        out += '[';
        for (std::size_t k = 0; k < decl.length; ++k) {
          if (k > 0) out += ',';
          out += std::to_string(state.slots[offset + k]);
        }
        out += ']';
      } else {
        out += std::to_string(state.slots[offset]);
      }
    }
    out += '\n';
  }
  return out;
}

OracleVerdict RelOracle(const Spec& spec, const ExecOutcome& base_outcome,
                        const State& input,
                        const ExecOutcome& candidate_outcome) {
  OracleVerdict base = spec.AbsOracle(input, base_outcome);
  OracleVerdict candidate = spec.AbsOracle(input, candidate_outcome);
  return {!base.passed || candidate.passed, candidate.vacuous};
}

const char* ToString(Classification classification) {
  switch (classification) {
    case Classification::kAbsolutelyCorrect:
      return "absolutely_correct";
    case Classification::kStrictlyMoreCorrect:
      return "strictly_more_correct";
    case Classification::kAsCorrect:
      return "as_correct";
    case Classification::kNotMoreCorrect:
      return "not_more_correct";
  }
  return "?";
}

Classification ClassificationFromString(const std::string& text) {
  for (Classification c :
       {Classification::kAbsolutelyCorrect, Classification::kStrictlyMoreCorrect,
        Classification::kAsCorrect, Classification::kNotMoreCorrect}) {
    if (text == ToString(c)) return c;
  }
  throw ModelError("unknown classification '" + text + "'");
}

Classification Classify(const SuiteReport& report) {
  if (report.cumulabs) return Classification::kAbsolutelyCorrect;
  if (report.cumulrel && report.cumulstrict) {
    return Classification::kStrictlyMoreCorrect;
  }
  if (report.cumulrel) return Classification::kAsCorrect;
  return Classification::kNotMoreCorrect;
}

BaselineRun RunBaseline(const Executable& base, const Spec& spec,
                        const TestSuite& suite, const RunOptions& options) {
  if (!Compatible(base.space(), spec.space())) {
    throw SpaceMismatchError(
        "base program variables do not match the specification");
  }
  BaselineRun run;
  for (const State& input : suite.inputs) {
    run.outcomes.push_back(base.Run(input, options.fuel, options.mode));
    run.verdicts.push_back(spec.AbsOracle(input, run.outcomes.back()));
  }
  return run;
}

SuiteReport RunAgainstBaseline(const Executable& candidate,
                               const BaselineRun& baseline, const Spec& spec,
                               const TestSuite& suite,
                               const RunOptions& options) {
  if (!Compatible(candidate.space(), spec.space())) {
    throw SpaceMismatchError(
        "candidate program variables do not match the specification");
  }
  SuiteReport report;
  for (std::size_t k = 0; k < suite.inputs.size(); ++k) {
    const State& input = suite.inputs[k];
    TestRecord record;
    record.input = input;
    record.base_outcome = baseline.outcomes[k];
    record.candidate_outcome = candidate.Run(input, options.fuel, options.mode);
    record.base = baseline.verdicts[k];
    record.candidate = spec.AbsOracle(input, record.candidate_outcome);
    bool abscor = record.candidate.passed;
    bool base_ok = record.base.passed;
    report.cumulabs = report.cumulabs && abscor;
    report.cumulrel = report.cumulrel && (!base_ok || abscor);
    report.cumulstrict = report.cumulstrict || (!base_ok && abscor);
    if (base_ok && abscor) ++report.n0;
    if (!base_ok && abscor) ++report.n1;
    if (!base_ok && !abscor) ++report.n2;
    if (base_ok && !abscor) ++report.n3;
    report.records.push_back(std::move(record));
  }
  return report;
}

SuiteReport RunSuite(const Program& candidate, const Program& base,
                     const Spec& spec, const TestSuite& suite,
                     const RunOptions& options) {
  Executable base_exe(base);
  Executable candidate_exe(candidate);
  BaselineRun baseline = RunBaseline(base_exe, spec, suite, options);
  return RunAgainstBaseline(candidate_exe, baseline, spec, suite, options);
}

Json SelectionToJson(const SelectionParams& params, std::size_t size) {
  Json out = {{"strategy", ToString(params.strategy)},
              {"size", size},
              {"pin_unconstrained", params.pin_unconstrained}};
  if (params.strategy == Selection::kRandom ||
      params.strategy == Selection::kCompetenceDomainOfBase) {
    out["seed"] = params.seed;
    out["count"] = params.count;
  }
  if (params.strategy == Selection::kFile) out["path"] = params.path;
  return out;
}

Json OutcomeToJson(const ExecOutcome& outcome, const StateSpace& space) {
  Json out = {{"kind", ToString(outcome.kind)}};
  if (outcome.is_final()) out["state"] = StateToJson(space, outcome.final_state);
  if (outcome.kind == ExecOutcome::Kind::kUndefined) out["site"] = outcome.site;
  return out;
}

Json SuiteReportToJson(const SuiteReport& report, const StateSpace& space) {
  Json tests = Json::array();
  for (const TestRecord& record : report.records) {
    tests.push_back(
        {{"input", StateToJson(space, record.input)},
         {"base",
          {{"outcome", OutcomeToJson(record.base_outcome, space)},
           {"passed", record.base.passed},
           {"vacuous", record.base.vacuous}}},
         {"candidate",
          {{"outcome", OutcomeToJson(record.candidate_outcome, space)},
           {"passed", record.candidate.passed},
           {"vacuous", record.candidate.vacuous}}}});
  }
  return {{"cumulabs", report.cumulabs},
          {"cumulrel", report.cumulrel},
          {"cumulstrict", report.cumulstrict},
          {"n0", report.n0},
          {"n1", report.n1},
          {"n2", report.n2},
          {"n3", report.n3},
          {"classification", ToString(Classify(report))},
          {"tests", std::move(tests)}};
}

}  // namespace relcor
