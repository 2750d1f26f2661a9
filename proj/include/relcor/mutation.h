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


// Single-site mutants and multi-site substitutions over program ASTs.
//
// Sites are addressed by the preorder index of an expression node, counted
// over the whole program body as VisitExprsPreorder walks it.

#ifndef RELCOR_MUTATION_H
#define RELCOR_MUTATION_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relcor/ast.h"
#include "relcor/interpreter.h"
#include "relcor/relation_json.h"

namespace relcor {

enum class SiteKind { kBinaryArithOp, kIntegerLiteral, kArrayIndex };

const char* ToString(SiteKind kind);
SiteKind SiteKindFromString(const std::string& text);

struct MutationSite {
  std::size_t path = 0;
  SiteKind kind = SiteKind::kBinaryArithOp;

  friend bool operator==(const MutationSite&, const MutationSite&) = default;
};

struct OperatorSet {
  bool aorb = true;     // binary arithmetic operator replacement
  bool literal = false; // integer literal k -> k+1, k-1
  bool index = false;   // array index e -> e+1, e-1

  // Comma-separated list of "aorb", "literal", "index".
  static OperatorSet Parse(const std::string& text);
  std::string ToString() const;
};

struct Mutant {
  std::size_t ordinal = 0;  // 1-based
  MutationSite site;
  std::string op;           // e.g. "AORB", "LIT+1", "IDX-1"
  ExprPtr replacement;
  Program program;
  std::string statement;    // header of the mutated statement
};

struct Patch {
  std::vector<std::pair<MutationSite, ExprPtr>> substitutions;
};

std::vector<MutationSite> Sites(const Program& program,
                                std::span<const SiteKind> kinds);

// Ordinals follow site preorder, then operator order: AORB replacements in
// the order + - * / %, then literal +1, -1, then index +1, -1.
std::vector<Mutant> Generate(const Program& program, const OperatorSet& ops);

// Simultaneous substitution. Throws ModelError when a site does not exist,
// has another kind, or overlaps another site of the patch.
Program ApplyPatch(const Program& program, const Patch& patch);

// The expression node at `path`.
const Expr& ExprAt(const Program& program, std::size_t path);

// Hex digest of a sequence of outcomes.
std::string FingerprintOutcomes(std::span<const ExecOutcome> outcomes);
// Digest of the outcomes on the probe inputs.
std::string SemanticFingerprint(const Program& program,
                                std::span<const State> probe,
                                std::uint64_t fuel, EvalMode mode);
std::string SemanticFingerprint(const Executable& program,
                                std::span<const State> probe,
                                std::uint64_t fuel, EvalMode mode);

// {"substitutions": [{"path": 3, "kind": "integer-literal",
//                     "original": "N", "replacement": "N + 1"}, ...]}
// Replacements are parsed in the context of `program`; "original", when
// present, must match the source text of the node at `path`.
Patch PatchFromJson(const Json& json, const Program& program);
Json PatchToJson(const Patch& patch, const Program& program);

Json MutantToJson(const Mutant& mutant);
Json MutantManifest(std::span<const Mutant> mutants);

}  // namespace relcor

#endif  // RELCOR_MUTATION_H
