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


// Stepwise repair: mutate a program, keep the mutants that are strictly
// more-correct than it, and repeat breadth-first until an absolutely correct
// program turns up.

#ifndef RELCOR_REPAIR_H
#define RELCOR_REPAIR_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relcor/mutation.h"
#include "relcor/relation.h"
#include "relcor/spec.h"
#include "relcor/testing.h"

namespace relcor {

// kTesting runs a test suite; kExact compares program functions.
enum class RepairMode { kTesting, kExact };

const char* ToString(RepairMode mode);
RepairMode RepairModeFromString(const std::string& text);

struct RepairConfig {
  OperatorSet operators;
  SelectionParams selection;
  RunOptions run;
  std::size_t max_depth = 5;
  std::size_t max_frontier = 64;
  RepairMode mode = RepairMode::kTesting;
  unsigned threads = 0;  // 0: one per hardware thread
};

// Verdict of one candidate against a base.
struct CandidateVerdict {
  Classification classification = Classification::kNotMoreCorrect;
  // Testing mode only.
  std::size_t n0 = 0, n1 = 0, n2 = 0, n3 = 0;
};

// Classifies every candidate against `base`. Testing mode runs `suite`
// (which must be non-empty); exact mode denotes every program, enumerates
// the specification and ignores `suite`. Throws CapacityError when a space
// is too large for exact mode.
std::vector<CandidateVerdict> ClassifyCandidates(
    const Program& base, std::span<const Program> candidates, const Spec& spec,
    const TestSuite& suite, RepairMode mode, const RunOptions& run,
    const Limits& limits = {}, unsigned threads = 0);

// Whether `base` itself counts as absolutely correct under `mode`.
bool IsSolution(const Program& base, const Spec& spec, const TestSuite& suite,
                RepairMode mode, const RunOptions& run,
                const Limits& limits = {});

struct MutantResult {
  std::size_t ordinal = 0;
  MutationSite site;
  std::string op;
  std::string statement;
  CandidateVerdict verdict;
  std::string fingerprint;
  // Strictly more-correct mutants: the node created for it, or the earlier
  // node with the same behaviour.
  std::optional<std::size_t> node;
  bool duplicate = false;
};

enum class NodeStatus { kSolution, kDeadEnd, kExpanded, kUnexpanded };

const char* ToString(NodeStatus status);
NodeStatus NodeStatusFromString(const std::string& text);

struct RepairNode {
  std::size_t id = 0;
  std::string label;  // "base", "base.12", "base.12.28", ...
  std::optional<std::size_t> parent;
  std::size_t ordinal = 0;  // mutant ordinal under the parent
  std::size_t depth = 0;
  // Relative to the parent; the root carries its verdict against itself.
  Classification classification = Classification::kAsCorrect;
  std::string fingerprint;
  Program program;
  NodeStatus status = NodeStatus::kUnexpanded;
  // Expanded nodes: the verdict of every mutant, in ordinal order.
  std::vector<MutantResult> mutants;
  // Earlier nodes that one of this node's as-correct mutants behaves like.
  std::vector<std::size_t> equivalents;
};

struct FaultMetrics {
  // Behaviourally distinct strictly more-correct mutants of the root.
  std::size_t fault_density_lb = 0;
  // Depth of the shallowest solution, if one was found.
  std::optional<std::size_t> fault_depth_ub;
};

struct RepairTree {
  std::vector<RepairNode> nodes;  // nodes[0] is the root
  std::vector<std::size_t> solutions;
  std::vector<std::size_t> dead_ends;
  FaultMetrics metrics;
  std::size_t suite_size = 0;
  std::size_t frontier_dropped = 0;  // nodes cut by max_frontier

  const RepairNode& root() const { return nodes.front(); }
};

RepairTree Repair(const Program& base, const Spec& spec,
                  const RepairConfig& config);

std::string RepairTreeToDot(const RepairTree& tree);
Json RepairTreeToJson(const RepairTree& tree);
// Throws ModelError on a malformed document.
RepairTree RepairTreeFromJson(const Json& json);

struct FaultCheck {
  bool is_fault_removal = false;
  StateSet cd_before;
  StateSet cd_after;
  Program patched;
};

// Applies `patch` and compares competence domains of the program functions.
FaultCheck VerifyFault(const Program& base, const Patch& patch,
                       const Spec& spec, const Limits& limits = {});

Json FaultCheckToJson(const FaultCheck& check);

}  // namespace relcor

#endif  // RELCOR_REPAIR_H
