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


#include "relcor/studies.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "relcor/errors.h"
#include "relcor/parser.h"
#include "relcor/repair.h"
#include "relcor/semantics.h"
#include "relcor/spec.h"

#ifndef RELCOR_DATA_DIR
#define RELCOR_DATA_DIR "data"
#endif

namespace relcor {

namespace {

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Study {
 public:
  Study(std::string name, const StudyOptions& options)
      : dir_((options.data_dir.empty() ? DefaultDataDir() : options.data_dir) +
             "/studies/" + name) {
    result_.study = std::move(name);
    expected_ = Json::parse(ReadText(Path("expectations.json")));
  }

  std::string Path(const std::string& file) const { return dir_ + "/" + file; }
  std::string Read(const std::string& file) const { return ReadText(Path(file)); }
  Json ReadJson(const std::string& file) const { return Json::parse(Read(file)); }
  const Json& expected(const std::string& key) const {
    return expected_.at(key);
  }

  void Check(const std::string& name, const Json& expected,
             const Json& actual) {
    result_.facts.push_back({name, expected, actual, expected == actual});
  }
  void Check(const std::string& name, bool passed, const Json& expected,
             const Json& actual) {
    result_.facts.push_back({name, expected, actual, passed});
  }

  StudyResult& result() { return result_; }

 private:
  std::string dir_;
  Json expected_;
  StudyResult result_;
};

Json Labels(const StateSet& set) {
  Json out = Json::array();
  const StateSpace& space = set.space();
  for (StateIndex s : set.members()) {
    State state = space.StateAt(s);
    out.push_back(space.vars().size() == 1 && !space.vars()[0].is_array()
                      ? space.FormatValue(0, state.slots[0])
                      : space.Format(state));
  }
  return out;
}

}  // namespace

bool StudyResult::passed() const {
  for (const StudyFact& fact : facts) {
    if (!fact.passed) return false;
  }
  return !facts.empty();
}

std::string DefaultDataDir() {
  if (const char* dir = std::getenv("RELCOR_DATA_DIR"); dir && *dir) {
    return dir;
  }
  return RELCOR_DATA_DIR;
}

std::vector<std::string> StudyNames() { return {"lattice", "arraysum", "fermat"}; }

StudyResult RunStudy(const std::string& name, const StudyOptions& options) {
  if (name == "lattice") return RunLatticeStudy(options);
  if (name == "arraysum") return RunArraySumStudy(options);
  if (name == "fermat") return RunFermatStudy(options);
  throw ModelError("unknown study '" + name +
                   "' (expected lattice, arraysum or fermat)");
}

StudyResult RunLatticeStudy(const StudyOptions& options) {
  Study study("lattice", options);
  Spec spec = SpecFromJson(study.ReadJson("spec.json"));
  const Relation& relation = spec.relation();
  std::vector<Relation> programs;
  std::vector<std::string> names;
  for (int k = 0; k <= 9; ++k) {
    names.push_back("P" + std::to_string(k));
    programs.push_back(RelationFromJson(study.ReadJson(names.back() + ".json")));
  }

  Json domains = Json::object();
  Json correct = Json::array();
  for (std::size_t k = 0; k < programs.size(); ++k) {
    domains[names[k]] = Labels(CompetenceDomain(relation, programs[k]));
    if (IsCorrect(programs[k], relation)) correct.push_back(names[k]);
  }
  study.Check("competence_domains", study.expected("competence_domains"),
              domains);
  study.Check("correct", study.expected("correct"), correct);

  CorrectnessOrder order = OrderByCorrectness(programs, relation);
  auto representative = [&](std::size_t group) {
    return names[order.groups[group].members.front()];
  };
  Json groups = Json::array();
  for (const auto& group : order.groups) {
    Json members = Json::array();
    for (std::size_t m : group.members) members.push_back(names[m]);
    groups.push_back(members);
  }
  std::set<std::pair<std::string, std::string>> cover_set;
  for (auto [lower, upper] : order.covers) {
    cover_set.emplace(representative(lower), representative(upper));
  }
  Json covers = Json::array();
  for (const auto& [lower, upper] : cover_set) covers.push_back({lower, upper});
  Json minimal = Json::array();
  for (std::size_t g : order.Minimal()) minimal.push_back(representative(g));
  Json maximal = Json::array();
  for (std::size_t g : order.Maximal()) maximal.push_back(representative(g));
  study.Check("groups", study.expected("groups"), groups);
  study.Check("covers", study.expected("covers"), covers);
  study.Check("minimal", study.expected("minimal"), minimal);
  study.Check("maximal", study.expected("maximal"), maximal);

  StudyResult& result = study.result();
  result.report = {{"competence_domains", domains},
                   {"correct", correct},
                   {"groups", groups},
                   {"covers", covers},
                   {"minimal", minimal},
                   {"maximal", maximal}};
  result.artifacts["lattice.dot"] = CorrectnessOrderToDot(order, names);
  return std::move(result);
}

StudyResult RunArraySumStudy(const StudyOptions& options) {
  Study study("arraysum", options);
  Program base = ParseProgram(study.Read("p.imp"));
  Spec spec = SpecFromJson(study.ReadJson("spec.json"));
  Json patches = study.ReadJson("patches.json");
  Relation spec_relation = spec.Enumerate();
  Relation base_function = Denote(base);

  // The competence domain stated as a predicate over the input state.
  std::string cd_text = study.expected("base_competence_domain");
  Spec cd_predicate = Spec::Predicate(spec.space(), cd_text, "true");
  std::vector<StateIndex> stated;
  const StateSpace& space = spec.space();
  for (StateIndex s = 0; s < *space.size(); ++s) {
    if (cd_predicate.InDom(space.StateAt(s))) stated.push_back(s);
  }
  StateSet base_cd = CompetenceDomain(spec_relation, base_function);
  study.Check("base_competence_domain",
              base_cd == StateSet(spec.space_ptr(), stated),
              Json{{"predicate", cd_text}, {"size", stated.size()}},
              Json{{"size", base_cd.size()}});

  auto patch = [&](const std::string& name) {
    return PatchFromJson(patches.at(name), base);
  };
  Json removals = Json::object();
  for (const auto& [name, value] : study.expected("fault_removal").items()) {
    (void)value;
    FaultCheck check = VerifyFault(base, patch(name), spec);
    removals[name] = check.is_fault_removal;
  }
  study.Check("fault_removal", study.expected("fault_removal"), removals);

  Json correct_after = Json::object();
  Patch combined;
  for (const auto& [name, value] : study.expected("correct_after").items()) {
    (void)value;
    Patch p = patch(name);
    correct_after[name] =
        IsCorrect(Denote(ApplyPatch(base, p)), spec_relation);
    for (auto& item : p.substitutions) combined.substitutions.push_back(item);
  }
  study.Check("correct_after", study.expected("correct_after"), correct_after);
  bool combined_correct =
      IsCorrect(Denote(ApplyPatch(base, combined)), spec_relation);
  study.Check("correct_after_combined", study.expected("correct_after_combined"),
              combined_correct);

  StudyResult& result = study.result();
  result.report = {{"base_competence_domain_size", base_cd.size()},
                   {"state_count", *space.size()},
                   {"fault_removal", removals},
                   {"correct_after", correct_after},
                   {"correct_after_combined", combined_correct}};
  return std::move(result);
}

StudyResult RunFermatStudy(const StudyOptions& options) {
  Study study("fermat", options);
  Program base = ParseProgram(study.Read("basep.imp"));
  Program correct = ParseProgram(study.Read("correct.imp"));
  Spec spec = SpecFromJson(study.ReadJson("spec.json"));

  RepairConfig config;
  config.selection.strategy = Selection::kExhaustive;
  config.selection.seed = options.seed;
  config.run.fuel = study.expected("fuel").get<std::uint64_t>();
  config.run.mode = EvalMode::kMachine;
  config.threads = options.threads;
  RepairTree tree = Repair(base, spec, config);
  const RepairNode& root = tree.root();

  study.Check("suite_size", study.expected("suite_size"), tree.suite_size);
  study.Check("mutant_count", study.expected("mutant_count"),
              root.mutants.size());
  std::map<std::string, std::size_t> level1;
  for (const MutantResult& m : root.mutants) {
    ++level1[ToString(m.verdict.classification)];
  }
  study.Check("level1_absolutely_correct",
              study.expected("level1_absolutely_correct"),
              level1["absolutely_correct"]);
  std::size_t strict = level1["strictly_more_correct"];
  study.Check("level1_strictly_more_correct_min",
              strict >= study.expected("level1_strictly_more_correct_min")
                             .get<std::size_t>(),
              study.expected("level1_strictly_more_correct_min"), strict);
  Json depth = tree.metrics.fault_depth_ub ? Json(*tree.metrics.fault_depth_ub)
                                           : Json();
  study.Check("fault_depth_ub", study.expected("fault_depth_ub"), depth);
  study.Check("fault_density_lb_min",
              tree.metrics.fault_density_lb >=
                  study.expected("fault_density_lb_min").get<std::size_t>(),
              study.expected("fault_density_lb_min"),
              tree.metrics.fault_density_lb);
  bool dead_end = false;
  for (std::size_t id : tree.dead_ends) {
    if (tree.nodes[id].depth == 1) dead_end = true;
  }
  study.Check("dead_end_at_depth_one", study.expected("dead_end_at_depth_one"),
              dead_end);

  bool matches = !tree.solutions.empty();
  if (matches) {
    const Program& solution = tree.nodes[tree.solutions.front()].program;
    TestSuite suite = SelectTests(spec, &base, config.selection);
    Executable solution_exe(solution);
    Executable correct_exe(correct);
    for (const State& input : suite.inputs) {
      ExecOutcome got = solution_exe.Run(input, config.run.fuel, config.run.mode);
      ExecOutcome want = correct_exe.Run(input, config.run.fuel, config.run.mode);
      if (!got.is_final() || !want.is_final() ||
          got.final_state != want.final_state) {
        matches = false;
      }
    }
  }
  study.Check("solution_matches_correct",
              study.expected("solution_matches_correct"), matches);

  Json counts = Json::object();
  for (const auto& [name, count] : level1) counts[name] = count;
  StudyResult& result = study.result();
  result.report = {{"config",
                    {{"operators", config.operators.ToString()},
                     {"mode", ToString(config.mode)},
                     {"tests", SelectionToJson(config.selection,
                                               tree.suite_size)},
                     {"fuel", config.run.fuel},
                     {"max_depth", config.max_depth},
                     {"max_frontier", config.max_frontier}}},
                   {"level1", counts},
                   {"tree", RepairTreeToJson(tree)}};
  result.artifacts["fermat_tree.dot"] = RepairTreeToDot(tree);
  return std::move(result);
}

Json StudyResultToJson(const StudyResult& result) {
  Json facts = Json::array();
  for (const StudyFact& fact : result.facts) {
    facts.push_back({{"name", fact.name},
                     {"expected", fact.expected},
                     {"actual", fact.actual},
                     {"passed", fact.passed}});
  }
  return {{"study", result.study},
          {"passed", result.passed()},
          {"facts", std::move(facts)},
          {"report", result.report}};
}

}  // namespace relcor
