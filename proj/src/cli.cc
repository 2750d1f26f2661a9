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


#include "relcor/cli.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "relcor/errors.h"
#include "relcor/parser.h"
#include "relcor/relation_json.h"
#include "relcor/repair.h"
#include "relcor/semantics.h"
#include "relcor/spec.h"
#include "relcor/studies.h"

namespace relcor {

namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kBadInput = 2;

// Raised for a file that cannot be opened.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

Json ReadJsonFile(const std::string& path) {
  std::string text = ReadFile(path);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ModelError(path + ": " + e.what());
  }
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

bool IsJsonPath(const std::string& path) {
  return fs::path(path).extension() == ".json";
}

// A specification file: a spec document, or a bare relation.
Spec LoadSpec(const std::string& path) {
  Json json = ReadJsonFile(path);
  if (json.is_object() && json.contains("type")) return SpecFromJson(json);
  return Spec::Enumerated(RelationFromJson(json));
}

// A program-like artifact: a relation document, or program source whose
// function is computed.
Relation LoadFunction(const std::string& path) {
  if (IsJsonPath(path)) return RelationFromJson(ReadJsonFile(path));
  return Denote(ParseProgram(ReadFile(path)));
}

std::uint64_t DefaultSeed() {
  const char* text = std::getenv("RELCOR_SEED");
  if (!text || !*text) return 0;
  char* end = nullptr;
  unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0') throw ModelError("RELCOR_SEED must be an integer");
  return value;
}

SelectionParams ParseTests(const std::string& text, std::uint64_t seed,
                           std::size_t count) {
  SelectionParams params;
  params.seed = seed;
  params.count = count;
  if (text.rfind("file:", 0) == 0) {
    params.strategy = Selection::kFile;
    params.path = text.substr(5);
  } else {
    params.strategy = SelectionFromString(text);
  }
  return params;
}

struct Manifest {
  std::vector<std::string> command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> artifacts;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Json ToJson() const {
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return {{"command", command},     {"config", config},
            {"seed", seed},           {"artifacts", artifacts},
            {"version", kVersion},    {"duration_seconds", seconds}};
  }
};

// relcheck ----------------------------------------------------------------

struct RelcheckArgs {
  std::string spec;
  std::string refines, correct, competence;
  std::vector<std::string> more_correct;
  bool strict = false;
  bool assert_true = false;
};

int Relcheck(const RelcheckArgs& args, std::ostream& out) {
  Spec spec = LoadSpec(args.spec);
  Relation relation = spec.Enumerate();
  Json verdict = Json::object();
  bool all_true = true;
  if (!args.refines.empty()) {
    bool v = Refines(LoadFunction(args.refines), relation);
    verdict["refines"] = v;
    all_true &= v;
  }
  if (!args.correct.empty()) {
    bool v = IsCorrect(LoadFunction(args.correct), relation);
    verdict["correct"] = v;
    all_true &= v;
  }
  if (!args.competence.empty()) {
    verdict["competence_domain"] =
        StateSetToJson(CompetenceDomain(relation, LoadFunction(args.competence)));
  }
  if (!args.more_correct.empty()) {
    bool v = MoreCorrect(LoadFunction(args.more_correct[0]),
                         LoadFunction(args.more_correct[1]), relation,
                         args.strict);
    verdict[args.strict ? "strictly_more_correct" : "more_correct"] = v;
    all_true &= v;
  }
  if (verdict.empty()) {
    throw CLI::ValidationError(
        "relcheck needs --refines, --correct, --competence or --more-correct");
  }
  out << Dump(verdict);
  return args.assert_true && !all_true ? kFalse : kOk;
}

// semantics ---------------------------------------------------------------

struct SemanticsArgs {
  std::string program;
  std::string input;
  std::uint64_t fuel = 0;
  bool machine = false;
  std::uint64_t max_pairs = Limits{}.max_pairs;
};

int Semantics(const SemanticsArgs& args, std::ostream& out) {
  Program program = ParseProgram(ReadFile(args.program));
  if (args.input.empty()) {
    Limits limits;
    limits.max_pairs = args.max_pairs;
    out << Dump(RelationToJson(Denote(program, limits)));
    return kOk;
  }
  std::vector<State> inputs = ParseTestFile(program.space, args.input);
  std::uint64_t fuel = args.fuel ? args.fuel : DefaultExactFuel(program.space);
  EvalMode mode = args.machine ? EvalMode::kMachine : EvalMode::kExact;
  Executable exe(program);
  Json runs = Json::array();
  for (const State& input : inputs) {
    runs.push_back({{"input", StateToJson(program.space, input)},
                    {"outcome", OutcomeToJson(exe.Run(input, fuel, mode),
                                              program.space)}});
  }
  out << Dump(runs);
  return kOk;
}

// mutate ------------------------------------------------------------------

struct MutateArgs {
  std::string program;
  std::string operators = "aorb";
  std::string out_dir;
};

int Mutate(const MutateArgs& args, std::ostream& out) {
  Program program = ParseProgram(ReadFile(args.program));
  std::vector<Mutant> mutants =
      Generate(program, OperatorSet::Parse(args.operators));
  if (!args.out_dir.empty()) {
    for (const Mutant& m : mutants) {
      WriteFile(fs::path(args.out_dir) / ("m" + std::to_string(m.ordinal) + ".imp"),
                ToSource(m.program));
    }
  }
  out << Dump(MutantManifest(mutants));
  return kOk;
}

// repair ------------------------------------------------------------------

struct RepairArgs {
  std::string spec;
  std::string program;
  std::string operators = "aorb";
  std::string mode = "testing";
  std::string tests = "exhaustive";
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t fuel = 10000;
  bool exact_arith = false;
  std::size_t max_depth = 5;
  std::size_t max_frontier = 64;
  unsigned threads = 0;
  std::string dot_out;
  std::string json_out;
  std::string manifest_out;
};

int RunRepair(const RepairArgs& args, const std::vector<std::string>& command,
              std::ostream& out) {
  Manifest manifest;
  manifest.command = command;
  manifest.seed = args.seed;
  Spec spec = LoadSpec(args.spec);
  Program base = ParseProgram(ReadFile(args.program));
  RepairConfig config;
  config.operators = OperatorSet::Parse(args.operators);
  config.mode = RepairModeFromString(args.mode);
  config.selection = ParseTests(args.tests, args.seed, args.count);
  config.run.fuel = args.fuel;
  config.run.mode = args.exact_arith ? EvalMode::kExact : EvalMode::kMachine;
  config.max_depth = args.max_depth;
  config.max_frontier = args.max_frontier;
  config.threads = args.threads;
  RepairTree tree = Repair(base, spec, config);

  Json json = RepairTreeToJson(tree);
  if (!args.json_out.empty()) {
    WriteFile(args.json_out, Dump(json));
    manifest.artifacts.push_back(args.json_out);
  }
  if (!args.dot_out.empty()) {
    WriteFile(args.dot_out, RepairTreeToDot(tree));
    manifest.artifacts.push_back(args.dot_out);
  }
  Json summary = {{"nodes", tree.nodes.size()},
                  {"metrics", json["metrics"]},
                  {"solutions", Json::array()},
                  {"dead_ends", Json::array()}};
  for (std::size_t id : tree.solutions) {
    summary["solutions"].push_back(tree.nodes[id].label);
  }
  for (std::size_t id : tree.dead_ends) {
    summary["dead_ends"].push_back(tree.nodes[id].label);
  }
  if (args.json_out.empty()) summary["tree"] = json;
  manifest.config = {{"operators", config.operators.ToString()},
                     {"mode", ToString(config.mode)},
                     {"tests", SelectionToJson(config.selection,
                                               tree.suite_size)},
                     {"fuel", config.run.fuel},
                     {"max_depth", config.max_depth},
                     {"max_frontier", config.max_frontier}};
  if (!args.manifest_out.empty()) {
    WriteFile(args.manifest_out, Dump(manifest.ToJson()));
  }
  out << Dump(summary);
  return kOk;
}

// demo --------------------------------------------------------------------

struct DemoArgs {
  std::string study;
  std::string data_dir;
  std::string out_dir;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

int Demo(const DemoArgs& args, const std::vector<std::string>& command,
         std::ostream& out) {
  Manifest manifest;
  manifest.command = command;
  manifest.seed = args.seed;
  StudyOptions options;
  options.data_dir = args.data_dir;
  options.seed = args.seed;
  options.threads = args.threads;
  StudyResult result = RunStudy(args.study, options);

  fs::path dir = args.out_dir.empty() ? fs::path("relcor-out") / args.study
                                      : fs::path(args.out_dir);
  fs::path report = dir / (args.study + "_report.json");
  WriteFile(report, Dump(StudyResultToJson(result)));
  manifest.artifacts.push_back(report.string());
  for (const auto& [name, text] : result.artifacts) {
    WriteFile(dir / name, text);
    manifest.artifacts.push_back((dir / name).string());
  }
  manifest.config = {{"study", args.study},
                     {"data_dir", options.data_dir.empty() ? DefaultDataDir()
                                                           : options.data_dir}};
  WriteFile(dir / "manifest.json", Dump(manifest.ToJson()));

  for (const StudyFact& fact : result.facts) {
    out << (fact.passed ? "PASS " : "FAIL ") << args.study << ": " << fact.name;
    if (!fact.passed) {
      out << " (expected " << fact.expected.dump() << ", got "
          << fact.actual.dump() << ")";
    }
    out << "\n";
  }
  out << "report: " << report.string() << "\n";
  return result.passed() ? kOk : kFalse;
}

// report ------------------------------------------------------------------

void TabulateTree(const Json& tree, const std::string& only, std::ostream& out) {
  for (const Json& node : tree.at("nodes")) {
    const std::string label = node.at("label").get<std::string>();
    if (!only.empty() && label != only) continue;
    const Json& mutants = node.at("mutants");
    if (mutants.empty()) continue;
    out << "node " << label << " (" << node.at("status").get<std::string>()
        << ", " << mutants.size() << " mutants)\n";
    out << std::left << std::setw(8) << "ordinal" << std::setw(10) << "operator"
        << std::setw(24) << "classification" << std::setw(6) << "n0"
        << std::setw(6) << "n1" << std::setw(6) << "n2" << std::setw(6) << "n3"
        << "statement\n";
    for (const Json& m : mutants) {
      out << std::left << std::setw(8) << m.at("ordinal").get<std::size_t>()
          << std::setw(10) << m.at("operator").get<std::string>()
          << std::setw(24) << m.at("classification").get<std::string>()
          << std::setw(6) << m.at("n0").get<std::size_t>() << std::setw(6)
          << m.at("n1").get<std::size_t>() << std::setw(6)
          << m.at("n2").get<std::size_t>() << std::setw(6)
          << m.at("n3").get<std::size_t>()
          << m.at("statement").get<std::string>() << "\n";
    }
  }
  const Json& metrics = tree.at("metrics");
  out << "fault_density_lb " << metrics.at("fault_density_lb").dump()
      << ", fault_depth_ub " << metrics.at("fault_depth_ub").dump() << "\n";
}

int Report(const std::vector<std::string>& files, const std::string& node,
           std::ostream& out) {
  for (const std::string& file : files) {
    Json json = ReadJsonFile(file);
    out << "== " << file << "\n";
    try {
      if (json.contains("nodes")) {
        TabulateTree(json, node, out);
      } else if (json.contains("study")) {
        for (const Json& fact : json.at("facts")) {
          out << (fact.at("passed").get<bool>() ? "PASS " : "FAIL ")
              << fact.at("name").get<std::string>() << "\n";
        }
        const Json& report = json.at("report");
        if (report.contains("tree")) TabulateTree(report["tree"], node, out);
      } else {
        throw ModelError(file + ": neither a repair tree nor a study report");
      }
    } catch (const Json::exception& e) {
      throw ModelError(file + ": " + e.what());
    }
  }
  return kOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  std::vector<std::string> command(argv, argv + argc);
  CLI::App app{"Relative-correctness checking, mutation and stepwise repair",
               "relcor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RelcheckArgs relcheck;
  CLI::App* relcheck_cmd =
      app.add_subcommand("relcheck", "Compare relations or programs");
  relcheck_cmd->add_option("--spec", relcheck.spec, "Specification file")
      ->required();
  relcheck_cmd->add_option("--refines", relcheck.refines,
                           "Does this artifact refine the specification");
  relcheck_cmd->add_option("--correct", relcheck.correct,
                           "Is this artifact correct");
  relcheck_cmd->add_option("--competence", relcheck.competence,
                           "Competence domain of this artifact");
  relcheck_cmd
      ->add_option("--more-correct", relcheck.more_correct,
                   "CANDIDATE BASE: is CANDIDATE more-correct than BASE")
      ->expected(2);
  relcheck_cmd->add_flag("--strict", relcheck.strict,
                         "Ask for strict relative correctness");
  relcheck_cmd->add_flag("--assert", relcheck.assert_true,
                         "Exit 1 when a verdict is false");

  SemanticsArgs semantics;
  CLI::App* semantics_cmd =
      app.add_subcommand("semantics", "Program function or single runs");
  semantics_cmd->add_option("--program", semantics.program, "Program source")
      ->required();
  semantics_cmd->add_option("--input", semantics.input,
                            "Inputs in test-file syntax; runs instead of "
                            "printing the whole function");
  semantics_cmd->add_option("--fuel", semantics.fuel, "Loop iteration budget");
  semantics_cmd->add_flag("--machine", semantics.machine,
                          "64-bit arithmetic without interval checks");
  semantics_cmd->add_option("--max-pairs", semantics.max_pairs,
                            "Cap on enumerated states and pairs");

  MutateArgs mutate;
  CLI::App* mutate_cmd = app.add_subcommand("mutate", "List mutants");
  mutate_cmd->add_option("--program", mutate.program, "Program source")
      ->required();
  mutate_cmd->add_option("--operators", mutate.operators,
                         "Comma list of aorb, literal, index");
  mutate_cmd->add_option("--out-dir", mutate.out_dir,
                         "Write each mutant as m<ordinal>.imp here");

  RepairArgs repair;
  repair.seed = 0;
  CLI::App* repair_cmd = app.add_subcommand("repair", "Stepwise repair search");
  repair_cmd->add_option("--spec", repair.spec, "Specification file")
      ->required();
  repair_cmd->add_option("--program", repair.program, "Base program source")
      ->required();
  repair_cmd->add_option("--operators", repair.operators,
                         "Comma list of aorb, literal, index");
  repair_cmd->add_option("--mode", repair.mode, "testing or exact");
  repair_cmd->add_option(
      "--tests", repair.tests,
      "exhaustive, random, competence_domain_of_base or file:PATH");
  repair_cmd->add_option("--count", repair.count,
                         "Number of inputs for sampled selections");
  CLI::Option* repair_seed =
      repair_cmd->add_option("--seed", repair.seed, "Selection seed");
  repair_cmd->add_option("--fuel", repair.fuel, "Loop iteration budget");
  repair_cmd->add_flag("--exact-arith", repair.exact_arith,
                       "Run tests with interval-checked arithmetic");
  repair_cmd->add_option("--max-depth", repair.max_depth, "Search depth cap");
  repair_cmd->add_option("--max-frontier", repair.max_frontier,
                         "Nodes expanded per level");
  repair_cmd->add_option("--threads", repair.threads,
                         "Worker threads, 0 for all cores");
  repair_cmd->add_option("--dot-out", repair.dot_out, "Write the tree as DOT");
  repair_cmd->add_option("--json-out", repair.json_out,
                         "Write the tree as JSON");
  repair_cmd->add_option("--manifest-out", repair.manifest_out,
                         "Write a run manifest");

  DemoArgs demo;
  CLI::App* demo_cmd = app.add_subcommand("demo", "Run a bundled case study");
  demo_cmd->add_option("study", demo.study, "lattice, arraysum or fermat")
      ->required()
      ->check(CLI::IsMember(StudyNames()));
  demo_cmd->add_option("--data-dir", demo.data_dir, "Case study fixtures");
  demo_cmd->add_option("--out-dir", demo.out_dir,
                       "Output directory (default relcor-out/<study>)");
  CLI::Option* demo_seed =
      demo_cmd->add_option("--seed", demo.seed, "Seed recorded in the run");
  demo_cmd->add_option("--threads", demo.threads,
                       "Worker threads, 0 for all cores");

  std::vector<std::string> report_files;
  std::string report_node;
  CLI::App* report_cmd =
      app.add_subcommand("report", "Tabulate repair trees or study reports");
  report_cmd->add_option("files", report_files, "JSON artifacts");
  report_cmd->add_option("--node", report_node, "Only this node label");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kOk : kBadInput;
    }
    if (repair_seed->count() == 0) repair.seed = DefaultSeed();
    if (demo_seed->count() == 0) demo.seed = DefaultSeed();

    if (*relcheck_cmd) return Relcheck(relcheck, out);
    if (*semantics_cmd) return Semantics(semantics, out);
    if (*mutate_cmd) return Mutate(mutate, out);
    if (*repair_cmd) return RunRepair(repair, command, out);
    if (*demo_cmd) return Demo(demo, command, out);
    if (*report_cmd) return Report(report_files, report_node, out);
  } catch (const CLI::Error& e) {
    err << "relcor: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "relcor: error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace relcor
