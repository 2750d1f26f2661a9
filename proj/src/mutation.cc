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


#include "relcor/mutation.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "relcor/errors.h"
#include "relcor/parser.h"

namespace relcor {

namespace {

constexpr ArithOp kAorbOrder[] = {ArithOp::kAdd, ArithOp::kSub, ArithOp::kMul,
                                  ArithOp::kDiv, ArithOp::kMod};

bool HasKind(const Expr& expr, bool in_index, SiteKind kind) {
  switch (kind) {
    case SiteKind::kBinaryArithOp:
      return expr.kind == Expr::Kind::kBinary;
    case SiteKind::kIntegerLiteral:
      return expr.kind == Expr::Kind::kLiteral;
    case SiteKind::kArrayIndex:
      return in_index;
  }
  return false;
}

std::size_t SubtreeSize(const Expr& expr) {
  std::size_t size = 1;
  if (expr.lhs) size += SubtreeSize(*expr.lhs);
  if (expr.rhs) size += SubtreeSize(*expr.rhs);
  return size;
}

// Rebuilds a statement tree with some expression nodes replaced, numbering
// nodes exactly like VisitExprsPreorder. Untouched subtrees are shared.
class Rewriter {
 public:
  explicit Rewriter(const std::map<std::size_t, ExprPtr>& replacements)
      : replacements_(replacements) {}

  StmtPtr Rewrite(const StmtPtr& stmt) {
    switch (stmt->kind) {
      case Stmt::Kind::kAssign: {
        ExprPtr index = stmt->index ? Rewrite(stmt->index) : nullptr;
        ExprPtr value = Rewrite(stmt->value);
        if (index == stmt->index && value == stmt->value) return stmt;
        auto out = std::make_shared<Stmt>(*stmt);
        out->index = index;
        out->value = value;
        return out;
      }
      case Stmt::Kind::kSeq:
      case Stmt::Kind::kIf:
      case Stmt::Kind::kIfElse:
      case Stmt::Kind::kWhile:
      case Stmt::Kind::kBlock: {
        CondPtr cond = stmt->cond ? Rewrite(stmt->cond) : nullptr;
        StmtPtr first = stmt->first ? Rewrite(stmt->first) : nullptr;
        StmtPtr second = stmt->second ? Rewrite(stmt->second) : nullptr;
        if (cond == stmt->cond && first == stmt->first &&
            second == stmt->second) {
          return stmt;
        }
        auto out = std::make_shared<Stmt>(*stmt);
        out->cond = cond;
        out->first = first;
        out->second = second;
        return out;
      }
      default:
        return stmt;
    }
  }

  std::size_t visited() const { return counter_; }

 private:
  ExprPtr Rewrite(const ExprPtr& expr) {
    std::size_t index = counter_++;
    if (auto it = replacements_.find(index); it != replacements_.end()) {
      counter_ += SubtreeSize(*expr) - 1;
      return it->second;
    }
    ExprPtr lhs = expr->lhs ? Rewrite(expr->lhs) : nullptr;
    ExprPtr rhs = expr->rhs ? Rewrite(expr->rhs) : nullptr;
    if (lhs == expr->lhs && rhs == expr->rhs) return expr;
    auto out = std::make_shared<Expr>(*expr);
    out->lhs = lhs;
    out->rhs = rhs;
    return out;
  }

  CondPtr Rewrite(const CondPtr& cond) {
    ExprPtr lhs = cond->lhs ? Rewrite(cond->lhs) : nullptr;
    ExprPtr rhs = cond->rhs ? Rewrite(cond->rhs) : nullptr;
    CondPtr left = cond->left ? Rewrite(cond->left) : nullptr;
    CondPtr right = cond->right ? Rewrite(cond->right) : nullptr;
    if (lhs == cond->lhs && rhs == cond->rhs && left == cond->left &&
        right == cond->right) {
      return cond;
    }
    auto out = std::make_shared<Cond>(*cond);
    out->lhs = lhs;
    out->rhs = rhs;
    out->left = left;
    out->right = right;
    return out;
  }

  const std::map<std::size_t, ExprPtr>& replacements_;
  std::size_t counter_ = 0;
};

struct NodeInfo {
  const Expr* expr;
  const Stmt* owner;
  bool in_index;
};

std::vector<NodeInfo> Nodes(const Program& program) {
  std::vector<NodeInfo> nodes;
  VisitExprsPreorder(*program.body,
                     [&](const Expr& expr, const Stmt& owner, bool in_index) {
                       nodes.push_back({&expr, &owner, in_index});
                     });
  return nodes;
}

Program WithBody(const Program& program, StmtPtr body) {
  Program out;
  out.space = program.space;
  out.constants = program.constants;
  out.body = std::move(body);
  return out;
}

}  // namespace

const char* ToString(SiteKind kind) {
  switch (kind) {
    case SiteKind::kBinaryArithOp:
      return "binary-arith-op";
    case SiteKind::kIntegerLiteral:
      return "integer-literal";
    case SiteKind::kArrayIndex:
      return "array-index";
  }
  return "?";
}

SiteKind SiteKindFromString(const std::string& text) {
  for (SiteKind kind : {SiteKind::kBinaryArithOp, SiteKind::kIntegerLiteral,
                        SiteKind::kArrayIndex}) {
    if (text == ToString(kind)) return kind;
  }
  throw ModelError("unknown site kind '" + text + "'");
}

OperatorSet OperatorSet::Parse(const std::string& text) {
  OperatorSet ops{false, false, false};
  std::istringstream in(text);
  std::string item;
  bool any = false;
  while (std::getline(in, item, ',')) {
    std::transform(item.begin(), item.end(), item.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (item == "aorb") {
      ops.aorb = true;
    } else if (item == "literal") {
      ops.literal = true;
    } else if (item == "index") {
      ops.index = true;
    } else {
      throw ModelError("unknown mutation operator '" + item + "'");
    }
    any = true;
  }
  if (!any) throw ModelError("no mutation operator given");
  return ops;
}

std::string OperatorSet::ToString() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(aorb, "aorb");
  add(literal, "literal");
  add(index, "index");
  return out;
}

std::vector<MutationSite> Sites(const Program& program,
                                std::span<const SiteKind> kinds) {
  std::vector<MutationSite> out;
  std::vector<NodeInfo> nodes = Nodes(program);
  for (std::size_t path = 0; path < nodes.size(); ++path) {
    for (SiteKind kind : kinds) {
      if (HasKind(*nodes[path].expr, nodes[path].in_index, kind)) {
        out.push_back({path, kind});
      }
    }
  }
  return out;
}

std::vector<Mutant> Generate(const Program& program, const OperatorSet& ops) {
  std::vector<NodeInfo> nodes = Nodes(program);
  std::vector<Mutant> out;
  auto emit = [&](std::size_t path, SiteKind kind, std::string op,
                  ExprPtr replacement) {
    Mutant mutant;
    mutant.ordinal = out.size() + 1;
    mutant.site = {path, kind};
    mutant.op = std::move(op);
    mutant.replacement = replacement;
    Patch patch;
    patch.substitutions.emplace_back(mutant.site, std::move(replacement));
    mutant.program = ApplyPatch(program, patch);
    out.push_back(std::move(mutant));
  };
  for (std::size_t path = 0; path < nodes.size(); ++path) {
    const Expr& expr = *nodes[path].expr;
    if (ops.aorb && expr.kind == Expr::Kind::kBinary) {
      for (ArithOp op : kAorbOrder) {
        if (op == expr.op) continue;
        emit(path, SiteKind::kBinaryArithOp, "AORB",
             ast::Binary(op, expr.lhs, expr.rhs));
      }
    }
    if (ops.literal && expr.kind == Expr::Kind::kLiteral) {
      emit(path, SiteKind::kIntegerLiteral, "LIT+1", ast::Lit(expr.value + 1));
      emit(path, SiteKind::kIntegerLiteral, "LIT-1", ast::Lit(expr.value - 1));
    }
    if (ops.index && nodes[path].in_index) {
      auto self = std::make_shared<Expr>(expr);
      emit(path, SiteKind::kArrayIndex, "IDX+1",
           ast::Binary(ArithOp::kAdd, self, ast::Lit(1)));
      emit(path, SiteKind::kArrayIndex, "IDX-1",
           ast::Binary(ArithOp::kSub, self, ast::Lit(1)));
    }
  }
  // The owner statement is looked up in the mutant, where the replacement
  // sits at the same path.
  for (Mutant& mutant : out) {
    std::vector<NodeInfo> mutated = Nodes(mutant.program);
    mutant.statement = StatementHeader(*mutated[mutant.site.path].owner);
  }
  return out;
}

Program ApplyPatch(const Program& program, const Patch& patch) {
  std::vector<NodeInfo> nodes = Nodes(program);
  std::map<std::size_t, ExprPtr> replacements;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (const auto& [site, replacement] : patch.substitutions) {
    if (site.path >= nodes.size()) {
      throw ModelError("mutation site " + std::to_string(site.path) +
                       " does not exist");
    }
    const NodeInfo& node = nodes[site.path];
    if (!HasKind(*node.expr, node.in_index, site.kind)) {
      throw ModelError("mutation site " + std::to_string(site.path) +
                       " is not a " + ToString(site.kind));
    }
    if (!replacement) throw ModelError("empty replacement expression");
    if (!replacements.emplace(site.path, replacement).second) {
      throw ModelError("mutation site " + std::to_string(site.path) +
                       " appears twice in the patch");
    }
    spans.emplace_back(site.path, site.path + SubtreeSize(*node.expr));
  }
  std::sort(spans.begin(), spans.end());
  for (std::size_t k = 1; k < spans.size(); ++k) {
    if (spans[k].first < spans[k - 1].second) {
      throw ModelError("mutation sites " + std::to_string(spans[k - 1].first) +
                       " and " + std::to_string(spans[k].first) + " overlap");
    }
  }
  if (replacements.empty()) return program;
  Rewriter rewriter(replacements);
  return WithBody(program, rewriter.Rewrite(program.body));
}

const Expr& ExprAt(const Program& program, std::size_t path) {
  std::vector<NodeInfo> nodes = Nodes(program);
  if (path >= nodes.size()) {
    throw ModelError("expression " + std::to_string(path) + " does not exist");
  }
  return *nodes[path].expr;
}

std::string FingerprintOutcomes(std::span<const ExecOutcome> outcomes) {
  // FNV-1a, 64 bit.
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t word) {
    for (int k = 0; k < 8; ++k) {
      hash ^= (word >> (8 * k)) & 0xff;
      hash *= 0x100000001b3ULL;
    }
  };
  for (const ExecOutcome& outcome : outcomes) {
    mix(static_cast<std::uint64_t>(outcome.kind));
    if (outcome.is_final()) {
      for (std::int64_t slot : outcome.final_state.slots) {
        mix(static_cast<std::uint64_t>(slot));
      }
    }
  }
  char text[17];
  std::snprintf(text, sizeof(text), "%016llx",
                static_cast<unsigned long long>(hash));
  return text;
}

std::string SemanticFingerprint(const Executable& program,
                                std::span<const State> probe,
                                std::uint64_t fuel, EvalMode mode) {
  std::vector<ExecOutcome> outcomes;
  outcomes.reserve(probe.size());
  for (const State& input : probe) {
    outcomes.push_back(program.Run(input, fuel, mode));
  }
  return FingerprintOutcomes(outcomes);
}

std::string SemanticFingerprint(const Program& program,
                                std::span<const State> probe,
                                std::uint64_t fuel, EvalMode mode) {
  return SemanticFingerprint(Executable(program), probe, fuel, mode);
}

Patch PatchFromJson(const Json& json, const Program& program) {
  Patch patch;
  try {
    for (const Json& item : json.at("substitutions")) {
      MutationSite site{item.at("path").get<std::size_t>(),
                        SiteKindFromString(item.at("kind").get<std::string>())};
      if (item.contains("original")) {
        std::string expected = item["original"].get<std::string>();
        std::string actual = ToSource(ExprAt(program, site.path));
        if (actual != expected) {
          throw ModelError("site " + std::to_string(site.path) + " is '" +
                           actual + "', patch expects '" + expected + "'");
        }
      }
      patch.substitutions.emplace_back(
          site, ParseExpression(item.at("replacement").get<std::string>(),
                                program));
    }
  } catch (const Json::exception& e) {
    throw ModelError(std::string("bad patch: ") + e.what());
  }
  return patch;
}

Json PatchToJson(const Patch& patch, const Program& program) {
  Json items = Json::array();
  for (const auto& [site, replacement] : patch.substitutions) {
    items.push_back({{"path", site.path},
                     {"kind", ToString(site.kind)},
                     {"original", ToSource(ExprAt(program, site.path))},
                     {"replacement", ToSource(*replacement)}});
  }
  return {{"substitutions", std::move(items)}};
}

Json MutantToJson(const Mutant& mutant) {
  return {{"ordinal", mutant.ordinal},
          {"site", {{"path", mutant.site.path},
                    {"kind", ToString(mutant.site.kind)}}},
          {"operator", mutant.op},
          {"replacement", ToSource(*mutant.replacement)},
          {"statement", mutant.statement}};
}

Json MutantManifest(std::span<const Mutant> mutants) {
  Json out = Json::array();
  for (const Mutant& mutant : mutants) out.push_back(MutantToJson(mutant));
  return out;
}

}  // namespace relcor
