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


#include "relcor/repair.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "relcor/errors.h"
#include "relcor/parser.h"
#include "relcor/relation_json.h"
#include "relcor/semantics.h"

namespace relcor {

namespace {

// Runs body(0) .. body(count - 1) on a few worker threads. The first
// exception thrown is rethrown here.
template <typename Body>
void ParallelFor(std::size_t count, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t k; (k = next++) < count;) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

std::string FingerprintRelation(const Relation& relation) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t word) {
    for (int k = 0; k < 8; ++k) {
      hash ^= (word >> (8 * k)) & 0xff;
      hash *= 0x100000001b3ULL;
    }
  };
  for (const auto& [from, to] : relation.pairs()) {
    mix(from);
    mix(to);
  }
  char text[17];
  std::snprintf(text, sizeof(text), "%016llx",
                static_cast<unsigned long long>(hash));
  return text;
}

Classification ExactClassification(const Relation& candidate,
                                   const Relation& base, const Relation& spec) {
  if (IsCorrect(candidate, spec)) return Classification::kAbsolutelyCorrect;
  if (MoreCorrect(candidate, base, spec, true)) {
    return Classification::kStrictlyMoreCorrect;
  }
  if (MoreCorrect(candidate, base, spec, false)) {
    return Classification::kAsCorrect;
  }
  return Classification::kNotMoreCorrect;
}

bool Improves(Classification c) {
  return c == Classification::kAbsolutelyCorrect ||
         c == Classification::kStrictlyMoreCorrect;
}

// Everything the search needs about one candidate program.
struct Evaluated {
  CandidateVerdict verdict;
  std::string fingerprint;
  std::optional<Relation> function;  // exact mode
};

// Classifies candidates against a base, remembering the base's work.
class Judge {
 public:
  Judge(const Spec& spec, const TestSuite& suite, RepairMode mode,
        const RunOptions& run, const Limits& limits, unsigned threads)
      : spec_(spec),
        suite_(suite),
        mode_(mode),
        run_(run),
        limits_(limits),
        threads_(threads) {
    if (mode_ == RepairMode::kExact) {
      spec_relation_ = spec_.Enumerate(limits_);
    } else if (suite_.inputs.empty()) {
      throw EmptySuiteError("testing mode needs a non-empty suite");
    }
  }

  std::vector<Evaluated> Evaluate(const Program& base,
                                  std::span<const Program> candidates) const {
    std::vector<Evaluated> out(candidates.size());
    if (mode_ == RepairMode::kExact) {
      Relation base_function = Denote(base, limits_);
      ParallelFor(candidates.size(), threads_, [&](std::size_t k) {
        Relation function = Denote(candidates[k], limits_);
        out[k].verdict.classification =
            ExactClassification(function, base_function, *spec_relation_);
        out[k].fingerprint = FingerprintRelation(function);
        out[k].function = std::move(function);
      });
      return out;
    }
    Executable base_exe(base);
    BaselineRun baseline = RunBaseline(base_exe, spec_, suite_, run_);
    ParallelFor(candidates.size(), threads_, [&](std::size_t k) {
      Executable exe(candidates[k]);
      SuiteReport report =
          RunAgainstBaseline(exe, baseline, spec_, suite_, run_);
      CandidateVerdict& verdict = out[k].verdict;
      verdict.classification = Classify(report);
      verdict.n0 = report.n0;
      verdict.n1 = report.n1;
      verdict.n2 = report.n2;
      verdict.n3 = report.n3;
      std::vector<ExecOutcome> outcomes;
      outcomes.reserve(report.records.size());
      for (TestRecord& record : report.records) {
        outcomes.push_back(std::move(record.candidate_outcome));
      }
      out[k].fingerprint = FingerprintOutcomes(outcomes);
    });
    return out;
  }

  // The root compared with itself, which settles whether it is a solution.
  Evaluated EvaluateRoot(const Program& base) const {
    Evaluated root = Evaluate(base, std::span<const Program>(&base, 1))[0];
    bool solved;
    if (mode_ == RepairMode::kExact) {
      solved = IsCorrect(*root.function, *spec_relation_);
    } else {
      solved = root.verdict.classification ==
               Classification::kAbsolutelyCorrect;
    }
    root.verdict.classification = solved ? Classification::kAbsolutelyCorrect
                                         : Classification::kAsCorrect;
    return root;
  }

 private:
  const Spec& spec_;
  const TestSuite& suite_;
  RepairMode mode_;
  RunOptions run_;
  Limits limits_;
  unsigned threads_;
  std::optional<Relation> spec_relation_;
};

std::string ClassColor(const RepairNode& node) {
  switch (node.status) {
    case NodeStatus::kSolution:
      return "palegreen";
    case NodeStatus::kDeadEnd:
      return "lightcoral";
    case NodeStatus::kExpanded:
      return node.parent ? "lightblue" : "white";
    case NodeStatus::kUnexpanded:
      return "lightgrey";
  }
  return "white";
}

std::string DotEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

const char* ToString(RepairMode mode) {
  return mode == RepairMode::kExact ? "exact" : "testing";
}

RepairMode RepairModeFromString(const std::string& text) {
  if (text == "exact") return RepairMode::kExact;
  if (text == "testing") return RepairMode::kTesting;
  throw ModelError("unknown mode '" + text + "' (expected testing or exact)");
}

const char* ToString(NodeStatus status) {
  switch (status) {
    case NodeStatus::kSolution:
      return "solution";
    case NodeStatus::kDeadEnd:
      return "dead_end";
    case NodeStatus::kExpanded:
      return "expanded";
    case NodeStatus::kUnexpanded:
      return "unexpanded";
  }
  return "?";
}

NodeStatus NodeStatusFromString(const std::string& text) {
  for (NodeStatus status : {NodeStatus::kSolution, NodeStatus::kDeadEnd,
                            NodeStatus::kExpanded, NodeStatus::kUnexpanded}) {
    if (text == ToString(status)) return status;
  }
  throw ModelError("unknown node status '" + text + "'");
}

std::vector<CandidateVerdict> ClassifyCandidates(
    const Program& base, std::span<const Program> candidates, const Spec& spec,
    const TestSuite& suite, RepairMode mode, const RunOptions& run,
    const Limits& limits, unsigned threads) {
  Judge judge(spec, suite, mode, run, limits, threads);
  std::vector<CandidateVerdict> out;
  for (Evaluated& e : judge.Evaluate(base, candidates)) {
    out.push_back(e.verdict);
  }
  return out;
}

bool IsSolution(const Program& base, const Spec& spec, const TestSuite& suite,
                RepairMode mode, const RunOptions& run, const Limits& limits) {
  Judge judge(spec, suite, mode, run, limits, 1);
  return judge.EvaluateRoot(base).verdict.classification ==
         Classification::kAbsolutelyCorrect;
}

RepairTree Repair(const Program& base, const Spec& spec,
                  const RepairConfig& config) {
  if (config.max_depth < 1) throw ModelError("max_depth must be at least 1");
  if (config.max_frontier < 1) {
    throw ModelError("max_frontier must be at least 1");
  }
  TestSuite suite;
  if (config.mode == RepairMode::kTesting) {
    suite = SelectTests(spec, &base, config.selection);
  }
  Judge judge(spec, suite, config.mode, config.run, config.selection.limits,
              config.threads);

  RepairTree tree;
  tree.suite_size = suite.inputs.size();
  // Behaviour of each node, for revisit pruning. Exact mode confirms a
  // fingerprint match by comparing program functions.
  std::multimap<std::string, std::size_t> by_fingerprint;
  std::vector<std::optional<Relation>> functions;
  auto find_same = [&](const Evaluated& e) -> std::optional<std::size_t> {
    auto [lo, hi] = by_fingerprint.equal_range(e.fingerprint);
    for (auto it = lo; it != hi; ++it) {
      if (!e.function || *functions[it->second] == *e.function) {
        return it->second;
      }
    }
    return std::nullopt;
  };

  {
    Evaluated root_eval = judge.EvaluateRoot(base);
    RepairNode root;
    root.label = "base";
    root.classification = root_eval.verdict.classification;
    root.fingerprint = root_eval.fingerprint;
    root.program = base;
    by_fingerprint.emplace(root.fingerprint, 0);
    functions.push_back(std::move(root_eval.function));
    if (root.classification == Classification::kAbsolutelyCorrect) {
      root.status = NodeStatus::kSolution;
      tree.solutions.push_back(0);
    }
    tree.nodes.push_back(std::move(root));
  }

  bool solved = !tree.solutions.empty();
  std::vector<std::size_t> frontier{0};
  for (std::size_t depth = 0;
       !solved && !frontier.empty() && depth < config.max_depth; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      std::vector<Mutant> mutants =
          Generate(tree.nodes[id].program, config.operators);
      std::vector<Program> programs;
      programs.reserve(mutants.size());
      for (const Mutant& m : mutants) programs.push_back(m.program);
      std::vector<Evaluated> evaluated =
          judge.Evaluate(tree.nodes[id].program, programs);

      std::vector<MutantResult> results;
      std::set<std::size_t> equivalents;
      bool improved = false;
      for (std::size_t k = 0; k < mutants.size(); ++k) {
        MutantResult result;
        result.ordinal = mutants[k].ordinal;
        result.site = mutants[k].site;
        result.op = mutants[k].op;
        result.statement = mutants[k].statement;
        result.verdict = evaluated[k].verdict;
        result.fingerprint = evaluated[k].fingerprint;
        Classification c = result.verdict.classification;
        std::optional<std::size_t> same = find_same(evaluated[k]);
        if (Improves(c)) {
          improved = true;
          if (same) {
            result.node = same;
            result.duplicate = true;
          } else {
            RepairNode child;
            child.id = tree.nodes.size();
            child.label = tree.nodes[id].label + "." +
                          std::to_string(mutants[k].ordinal);
            child.parent = id;
            child.ordinal = mutants[k].ordinal;
            child.depth = depth + 1;
            child.classification = c;
            child.fingerprint = evaluated[k].fingerprint;
            child.program = std::move(mutants[k].program);
            if (c == Classification::kAbsolutelyCorrect) {
              child.status = NodeStatus::kSolution;
              tree.solutions.push_back(child.id);
              solved = true;
            } else if (next.size() < config.max_frontier) {
              next.push_back(child.id);
            } else {
              ++tree.frontier_dropped;
            }
            result.node = child.id;
            by_fingerprint.emplace(child.fingerprint, child.id);
            functions.push_back(std::move(evaluated[k].function));
            tree.nodes.push_back(std::move(child));
          }
        } else if (c == Classification::kAsCorrect && same && *same != id) {
          equivalents.insert(*same);
        }
        results.push_back(std::move(result));
      }
      RepairNode& node = tree.nodes[id];
      node.mutants = std::move(results);
      node.equivalents.assign(equivalents.begin(), equivalents.end());
      node.status = improved ? NodeStatus::kExpanded : NodeStatus::kDeadEnd;
      if (!improved) tree.dead_ends.push_back(id);
      if (solved) break;
    }
    frontier = std::move(next);
  }

  const RepairNode& root = tree.nodes.front();
  std::set<std::string> distinct;
  for (const MutantResult& m : root.mutants) {
    if (Improves(m.verdict.classification)) distinct.insert(m.fingerprint);
  }
  tree.metrics.fault_density_lb = distinct.size();
  for (std::size_t id : tree.solutions) {
    std::size_t depth = tree.nodes[id].depth;
    if (!tree.metrics.fault_depth_ub || depth < *tree.metrics.fault_depth_ub) {
      tree.metrics.fault_depth_ub = depth;
    }
  }
  return tree;
}

std::string RepairTreeToDot(const RepairTree& tree) {
  std::ostringstream out;
  out << "digraph repair {\n"
      << "  node [shape=box, style=filled, fontname=\"Helvetica\"];\n";
  for (const RepairNode& node : tree.nodes) {
    out << "  n" << node.id << " [label=\"" << DotEscape(node.label);
    if (node.parent) out << "\\n" << ToString(node.classification);
    if (node.status == NodeStatus::kDeadEnd) out << "\\ndead end";
    out << "\", fillcolor=\"" << ClassColor(node) << "\"];\n";
  }
  for (const RepairNode& node : tree.nodes) {
    if (node.parent) {
      out << "  n" << *node.parent << " -> n" << node.id << " [label=\""
          << node.ordinal << "\"];\n";
    }
  }
  for (const RepairNode& node : tree.nodes) {
    for (std::size_t other : node.equivalents) {
      out << "  n" << node.id << " -> n" << other
          << " [style=dashed, dir=none, label=\"as_correct\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json RepairTreeToJson(const RepairTree& tree) {
  Json nodes = Json::array();
  for (const RepairNode& node : tree.nodes) {
    Json mutants = Json::array();
    for (const MutantResult& m : node.mutants) {
      mutants.push_back({{"ordinal", m.ordinal},
                         {"path", m.site.path},
                         {"kind", ToString(m.site.kind)},
                         {"operator", m.op},
                         {"statement", m.statement},
                         {"classification", ToString(m.verdict.classification)},
                         {"n0", m.verdict.n0},
                         {"n1", m.verdict.n1},
                         {"n2", m.verdict.n2},
                         {"n3", m.verdict.n3},
                         {"fingerprint", m.fingerprint},
                         {"node", m.node ? Json(*m.node) : Json()},
                         {"duplicate", m.duplicate}});
    }
    nodes.push_back({{"id", node.id},
                     {"label", node.label},
                     {"parent", node.parent ? Json(*node.parent) : Json()},
                     {"ordinal", node.ordinal},
                     {"depth", node.depth},
                     {"classification", ToString(node.classification)},
                     {"status", ToString(node.status)},
                     {"fingerprint", node.fingerprint},
                     {"source", ToSource(node.program)},
                     {"equivalents", node.equivalents},
                     {"mutants", std::move(mutants)}});
  }
  Json metrics = {{"fault_density_lb", tree.metrics.fault_density_lb},
                  {"fault_depth_ub", tree.metrics.fault_depth_ub
                                         ? Json(*tree.metrics.fault_depth_ub)
                                         : Json()}};
  return {{"nodes", std::move(nodes)},
          {"solutions", tree.solutions},
          {"dead_ends", tree.dead_ends},
          {"metrics", std::move(metrics)},
          {"suite_size", tree.suite_size},
          {"frontier_dropped", tree.frontier_dropped}};
}

RepairTree RepairTreeFromJson(const Json& json) {
  RepairTree tree;
  try {
    for (const Json& item : json.at("nodes")) {
      RepairNode node;
      node.id = item.at("id").get<std::size_t>();
      if (node.id != tree.nodes.size()) {
        throw ModelError("repair tree node ids must be consecutive");
      }
      node.label = item.at("label").get<std::string>();
      if (!item.at("parent").is_null()) {
        node.parent = item["parent"].get<std::size_t>();
        if (*node.parent >= node.id) {
          throw ModelError("node " + node.label + " precedes its parent");
        }
      }
      node.ordinal = item.at("ordinal").get<std::size_t>();
      node.depth = item.at("depth").get<std::size_t>();
      node.classification =
          ClassificationFromString(item.at("classification").get<std::string>());
      node.status = NodeStatusFromString(item.at("status").get<std::string>());
      node.fingerprint = item.at("fingerprint").get<std::string>();
      node.program = ParseProgram(item.at("source").get<std::string>());
      node.equivalents =
          item.at("equivalents").get<std::vector<std::size_t>>();
      for (const Json& m : item.at("mutants")) {
        MutantResult result;
        result.ordinal = m.at("ordinal").get<std::size_t>();
        result.site = {m.at("path").get<std::size_t>(),
                       SiteKindFromString(m.at("kind").get<std::string>())};
        result.op = m.at("operator").get<std::string>();
        result.statement = m.at("statement").get<std::string>();
        result.verdict.classification =
            ClassificationFromString(m.at("classification").get<std::string>());
        result.verdict.n0 = m.at("n0").get<std::size_t>();
        result.verdict.n1 = m.at("n1").get<std::size_t>();
        result.verdict.n2 = m.at("n2").get<std::size_t>();
        result.verdict.n3 = m.at("n3").get<std::size_t>();
        result.fingerprint = m.at("fingerprint").get<std::string>();
        if (!m.at("node").is_null()) result.node = m["node"].get<std::size_t>();
        result.duplicate = m.at("duplicate").get<bool>();
        node.mutants.push_back(std::move(result));
      }
      tree.nodes.push_back(std::move(node));
    }
    if (tree.nodes.empty()) throw ModelError("repair tree has no nodes");
    tree.solutions = json.at("solutions").get<std::vector<std::size_t>>();
    tree.dead_ends = json.at("dead_ends").get<std::vector<std::size_t>>();
    for (std::size_t id : tree.solutions) {
      if (id >= tree.nodes.size()) throw ModelError("unknown solution node");
    }
    for (std::size_t id : tree.dead_ends) {
      if (id >= tree.nodes.size()) throw ModelError("unknown dead-end node");
    }
    const Json& metrics = json.at("metrics");
    tree.metrics.fault_density_lb =
        metrics.at("fault_density_lb").get<std::size_t>();
    if (!metrics.at("fault_depth_ub").is_null()) {
      tree.metrics.fault_depth_ub = metrics["fault_depth_ub"].get<std::size_t>();
    }
    tree.suite_size = json.at("suite_size").get<std::size_t>();
    tree.frontier_dropped = json.at("frontier_dropped").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw ModelError(std::string("bad repair tree: ") + e.what());
  }
  return tree;
}

FaultCheck VerifyFault(const Program& base, const Patch& patch,
                       const Spec& spec, const Limits& limits) {
  FaultCheck check;
  check.patched = ApplyPatch(base, patch);
  Relation spec_relation = spec.Enumerate(limits);
  Relation before = Denote(base, limits);
  Relation after = Denote(check.patched, limits);
  check.cd_before = CompetenceDomain(spec_relation, before);
  check.cd_after = CompetenceDomain(spec_relation, after);
  check.is_fault_removal = check.cd_before.IsSubsetOf(check.cd_after) &&
                           check.cd_before.size() < check.cd_after.size();
  return check;
}

Json FaultCheckToJson(const FaultCheck& check) {
  return {{"is_fault_removal", check.is_fault_removal},
          {"cd_before_size", check.cd_before.size()},
          {"cd_after_size", check.cd_after.size()},
          {"cd_before", StateSetToJson(check.cd_before)},
          {"cd_after", StateSetToJson(check.cd_after)},
          {"patched", ToSource(check.patched)}};
}

}  // namespace relcor
