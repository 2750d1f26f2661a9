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

#include "relcor/parser.h"

#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relcor/errors.h"

namespace relcor {

namespace {

struct Token {
  enum class Kind { kInt, kIdent, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::int64_t value = 0;
  SourcePos pos;
};

std::vector<Token> Lex(std::string_view text) {
  static const char* kPuncts[] = {"==", "!=", "<=", ">=", "&&", "||", "..",
                                  "(",  ")",  "{",  "}",  "[",  "]",  ";",
                                  ",",  "=",  "<",  ">",  "+",  "-",  "*",
                                  "/",  "%",  "!",  "'"};
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;
  auto pos_at = [&](std::size_t k) {
    return SourcePos{line, k - line_start + 1};
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (text.substr(i, 2) == "/*") {
      SourcePos start = pos_at(i);
      std::size_t end = text.find("*/", i + 2);
      if (end == std::string_view::npos) {
        throw ParseError("unterminated comment", start.line, start.column);
      }
      for (std::size_t k = i; k < end; ++k) {
        if (text[k] == '\n') {
          ++line;
          line_start = k + 1;
        }
      }
      i = end + 2;
      continue;
    }
    Token token;
    token.pos = pos_at(i);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      token.kind = Token::Kind::kInt;
      token.text = std::string(text.substr(i, j - i));
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j,
                                       token.value);
      if (ec != std::errc()) {
        throw ParseError("integer literal out of range", token.pos.line,
                         token.pos.column);
      }
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      token.kind = Token::Kind::kIdent;
      token.text = std::string(text.substr(i, j - i));
      i = j;
    } else {
      bool matched = false;
      for (const char* p : kPuncts) {
        std::string_view punct(p);
        if (text.substr(i, punct.size()) == punct) {
          token.kind = Token::Kind::kPunct;
          token.text = std::string(punct);
          i += punct.size();
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         token.pos.line, token.pos.column);
      }
    }
    tokens.push_back(std::move(token));
  }
  Token end;
  end.kind = Token::Kind::kEnd;
  end.text = "end of input";
  end.pos = pos_at(i);
  tokens.push_back(end);
  return tokens;
}

bool IsKeyword(const std::string& word) {
  static const char* kKeywords[] = {"int",   "const", "if",    "else", "while",
                                    "skip",  "abort", "true",  "false"};
  for (const char* k : kKeywords) {
    if (word == k) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_primed)
      : tokens_(Lex(text)), allow_primed_(allow_primed) {}

  Program ParseProgramText() {
    scopes_.emplace_back();
    std::vector<StmtPtr> stmts;
    while (!AtEnd()) {
      if (PeekIdent("const")) {
        ParseConst();
      } else if (PeekIdent("int")) {
        for (auto& [decl, init] : ParseDecl()) {
          Declare(decl);
          space_vars_.push_back(decl);
          if (init) stmts.push_back(init);
        }
      } else {
        stmts.push_back(ParseStatement());
      }
    }
    Program program;
    program.space = StateSpace(space_vars_);
    program.constants = constants_;
    program.body = ast::SeqOf(std::move(stmts));
    return program;
  }

  void DeclareSpace(const StateSpace& space) {
    scopes_.emplace_back();
    for (const VarDecl& decl : space.vars()) Declare(decl);
  }

  // Constants, state variables and every block local of `program`.
  void DeclareProgram(const Program& program) {
    for (const auto& [name, value] : program.constants) {
      constant_values_[name] = value;
    }
    DeclareSpace(program.space);
    DeclareLocals(*program.body);
  }

  void DeclareLocals(const Stmt& stmt) {
    if (stmt.kind == Stmt::Kind::kBlock) Declare(stmt.local);
    if (stmt.first) DeclareLocals(*stmt.first);
    if (stmt.second) DeclareLocals(*stmt.second);
  }

  CondPtr ParseWholeCond() {
    CondPtr cond = ParseCond();
    ExpectEnd();
    return cond;
  }

  ExprPtr ParseWholeExpr() {
    ExprPtr expr = ParseExpr();
    ExpectEnd();
    return expr;
  }

 private:
  // Statements and declarations.

  void ParseConst() {
    Expect("const");
    Token name = ExpectIdentToken();
    Expect("=");
    std::int64_t value = EvalConst(ParseExpr());
    Expect(";");
    if (constant_values_.count(name.text) || Lookup(name.text)) {
      throw Error(name, "redefinition of '" + name.text + "'");
    }
    constant_values_[name.text] = value;
    constants_.emplace_back(name.text, value);
  }

  std::vector<std::pair<VarDecl, StmtPtr>> ParseDecl() {
    Expect("int");
    std::int64_t min = std::numeric_limits<std::int32_t>::min();
    std::int64_t max = std::numeric_limits<std::int32_t>::max();
    if (Accept("<")) {
      min = ParseSignedConst();
      Expect("..");
      max = ParseSignedConst();
      if (max < min) throw Error(Peek(), "empty interval");
      Expect(">");
    }
    std::vector<std::pair<VarDecl, StmtPtr>> out;
    do {
      Token name = ExpectIdentToken();
      VarDecl decl;
      decl.name = name.text;
      decl.min = min;
      decl.max = max;
      if (Accept("[")) {
        std::int64_t length = EvalConst(ParseExpr());
        if (length <= 0) throw Error(name, "array length must be positive");
        decl.length = static_cast<std::size_t>(length);
        Expect("]");
      }
      StmtPtr init;
      if (Accept("=")) {
        if (decl.is_array()) {
          throw Error(name, "array initializers are not supported");
        }
        // The initializer is evaluated after the variable comes into scope.
        ExprPtr value = ParseExprWith(decl);
        auto assign = std::make_shared<Stmt>(*ast::Assign(decl.name, value));
        assign->pos = name.pos;
        init = assign;
      }
      out.emplace_back(std::move(decl), std::move(init));
    } while (Accept(","));
    Expect(";");
    return out;
  }

  ExprPtr ParseExprWith(const VarDecl& pending) {
    scopes_.emplace_back();
    scopes_.back()[pending.name] = pending.length;
    ExprPtr e = ParseExpr();
    scopes_.pop_back();
    return e;
  }

  std::int64_t ParseSignedConst() {
    bool negative = Accept("-");
    const Token& t = Peek();
    std::int64_t value;
    if (t.kind == Token::Kind::kInt) {
      value = t.value;
    } else if (t.kind == Token::Kind::kIdent && constant_values_.count(t.text)) {
      value = constant_values_[t.text];
    } else {
      throw Error(t, "expected integer bound, found '" + t.text + "'");
    }
    Advance();
    return negative ? -value : value;
  }

  StmtPtr ParseStatement() {
    const Token start = Peek();
    if (Accept(";")) return ast::Skip();
    if (PeekIdent("abort")) {
      Advance();
      Expect(";");
      return WithPos(ast::Abort(), start);
    }
    if (PeekIdent("skip")) {
      Advance();
      Expect(";");
      return WithPos(ast::Skip(), start);
    }
    if (PeekIdent("if")) {
      Advance();
      Expect("(");
      CondPtr cond = ParseCond();
      Expect(")");
      StmtPtr then_branch = ParseStatement();
      if (PeekIdent("else")) {
        Advance();
        StmtPtr else_branch = ParseStatement();
        return WithPos(ast::IfElse(cond, then_branch, else_branch), start);
      }
      return WithPos(ast::If(cond, then_branch), start);
    }
    if (PeekIdent("while")) {
      Advance();
      Expect("(");
      CondPtr cond = ParseCond();
      Expect(")");
      return WithPos(ast::While(cond, ParseStatement()), start);
    }
    if (Accept("{")) {
      scopes_.emplace_back();
      StmtPtr body = ParseItemsUntilBrace();
      scopes_.pop_back();
      return body;
    }
    if (start.kind == Token::Kind::kIdent && !IsKeyword(start.text)) {
      Token name = ExpectIdentToken();
      auto length = Lookup(name.text);
      if (!length) {
        throw Error(name, "undeclared variable '" + name.text + "'");
      }
      ExprPtr index;
      if (Accept("[")) {
        if (*length == 0) {
          throw Error(name, "'" + name.text + "' is not an array");
        }
        index = ParseExpr();
        Expect("]");
      } else if (*length != 0) {
        throw Error(name, "array '" + name.text + "' needs an index");
      }
      Expect("=");
      ExprPtr value = ParseExpr();
      Expect(";");
      StmtPtr s = index ? ast::AssignElement(name.text, index, value)
                        : ast::Assign(name.text, value);
      return WithPos(s, start);
    }
    throw Error(start, "expected statement, found '" + start.text + "'");
  }

  // Parses items up to and including the closing brace. A declaration
  // scopes everything after it.
  StmtPtr ParseItemsUntilBrace() {
    std::vector<StmtPtr> stmts;
    while (!Accept("}")) {
      if (AtEnd()) throw Error(Peek(), "expected '}', found end of input");
      if (PeekIdent("int")) {
        const Token start = Peek();
        auto decls = ParseDecl();
        for (auto& [decl, init] : decls) {
          if (Lookup(decl.name) || constant_values_.count(decl.name)) {
            throw Error(start, "redeclaration of '" + decl.name + "'");
          }
          Declare(decl);
        }
        StmtPtr rest = ParseItemsUntilBrace();
        for (std::size_t k = decls.size(); k-- > 0;) {
          if (decls[k].second) rest = ast::Seq(decls[k].second, rest);
          rest = WithPos(ast::Block(decls[k].first, rest), start);
        }
        stmts.push_back(rest);
        return ast::SeqOf(std::move(stmts));
      }
      stmts.push_back(ParseStatement());
    }
    return ast::SeqOf(std::move(stmts));
  }

  // Conditions.

  CondPtr ParseCond() {
    CondPtr left = ParseAnd();
    while (Accept("||")) left = ast::Or(left, ParseAnd());
    return left;
  }

  CondPtr ParseAnd() {
    CondPtr left = ParseNot();
    while (Accept("&&")) left = ast::And(left, ParseNot());
    return left;
  }

  CondPtr ParseNot() {
    if (Accept("!")) return ast::Not(ParseNot());
    return ParseCondPrimary();
  }

  CondPtr ParseCondPrimary() {
    if (PeekIdent("true")) {
      Advance();
      return ast::Bool(true);
    }
    if (PeekIdent("false")) {
      Advance();
      return ast::Bool(false);
    }
    if (PeekPunct("(")) {
      // Either a parenthesized condition or the start of an arithmetic
      // operand such as `(n % 2) == 1`.
      std::size_t saved = pos_;
      try {
        Advance();
        CondPtr inner = ParseCond();
        Expect(")");
        if (!IsComparisonOrArith(Peek())) return inner;
      } catch (const ParseError&) {
      }
      pos_ = saved;
    }
    ExprPtr lhs = ParseExpr();
    const Token& t = Peek();
    std::optional<CmpOp> op;
    if (t.kind == Token::Kind::kPunct) {
      if (t.text == "<") op = CmpOp::kLt;
      if (t.text == "<=") op = CmpOp::kLe;
      if (t.text == ">") op = CmpOp::kGt;
      if (t.text == ">=") op = CmpOp::kGe;
      if (t.text == "==") op = CmpOp::kEq;
      if (t.text == "!=") op = CmpOp::kNe;
    }
    if (!op) {
      throw Error(t, "expected one of <, <=, >, >=, ==, != but found '" +
                         t.text + "'");
    }
    Advance();
    return ast::Compare(*op, lhs, ParseExpr());
  }

  static bool IsComparisonOrArith(const Token& t) {
    if (t.kind != Token::Kind::kPunct) return false;
    for (const char* p : {"<", "<=", ">", ">=", "==", "!=", "+", "-", "*",
                          "/", "%"}) {
      if (t.text == p) return true;
    }
    return false;
  }

  // Expressions.

  ExprPtr ParseExpr() {
    ExprPtr left = ParseTerm();
    while (true) {
      if (Accept("+")) {
        left = ast::Binary(ArithOp::kAdd, left, ParseTerm());
      } else if (Accept("-")) {
        left = ast::Binary(ArithOp::kSub, left, ParseTerm());
      } else {
        return left;
      }
    }
  }

  ExprPtr ParseTerm() {
    ExprPtr left = ParseUnary();
    while (true) {
      if (Accept("*")) {
        left = ast::Binary(ArithOp::kMul, left, ParseUnary());
      } else if (Accept("/")) {
        left = ast::Binary(ArithOp::kDiv, left, ParseUnary());
      } else if (Accept("%")) {
        left = ast::Binary(ArithOp::kMod, left, ParseUnary());
      } else {
        return left;
      }
    }
  }

  ExprPtr ParseUnary() {
    if (Accept("-")) {
      // A minus directly on an integer token is a negative literal.
      if (Peek().kind == Token::Kind::kInt) {
        std::int64_t v = Peek().value;
        Advance();
        return ast::Lit(-v);
      }
      return ast::Neg(ParseUnary());
    }
    return ParsePrimary();
  }

  ExprPtr ParsePrimary() {
    const Token t = Peek();
    if (t.kind == Token::Kind::kInt) {
      Advance();
      return ast::Lit(t.value);
    }
    if (Accept("(")) {
      ExprPtr inner = ParseExpr();
      Expect(")");
      return inner;
    }
    if (t.kind == Token::Kind::kIdent && !IsKeyword(t.text)) {
      Advance();
      if (auto c = constant_values_.find(t.text); c != constant_values_.end()) {
        return ast::Lit(c->second, t.text);
      }
      auto length = Lookup(t.text);
      if (!length) throw Error(t, "undeclared variable '" + t.text + "'");
      bool primed = false;
      if (Accept("'")) {
        if (!allow_primed_) {
          throw Error(t, "primed variables are only allowed in predicates");
        }
        primed = true;
      }
      if (Accept("[")) {
        if (*length == 0) throw Error(t, "'" + t.text + "' is not an array");
        ExprPtr index = ParseExpr();
        Expect("]");
        return ast::ArrayRead(t.text, index, primed);
      }
      if (*length != 0) {
        throw Error(t, "array '" + t.text + "' needs an index");
      }
      return ast::Var(t.text, primed);
    }
    throw Error(t, "expected expression, found '" + t.text + "'");
  }

  std::int64_t EvalConst(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::kLiteral:
        return e->value;
      case Expr::Kind::kNeg:
        return -EvalConst(e->lhs);
      case Expr::Kind::kBinary: {
        std::int64_t a = EvalConst(e->lhs);
        std::int64_t b = EvalConst(e->rhs);
        switch (e->op) {
          case ArithOp::kAdd:
            return a + b;
          case ArithOp::kSub:
            return a - b;
          case ArithOp::kMul:
            return a * b;
          case ArithOp::kDiv:
          case ArithOp::kMod:
            if (b == 0) throw Error(Peek(), "division by zero in constant");
            return e->op == ArithOp::kDiv ? a / b : a % b;
        }
        break;
      }
      default:
        break;
    }
    throw Error(Peek(), "expected a constant expression");
  }

  // Scopes map names to array length (0 for scalars).

  void Declare(const VarDecl& decl) {
    if (Lookup(decl.name) || constant_values_.count(decl.name)) {
      throw ParseError("redeclaration of '" + decl.name + "'",
                       Peek().pos.line, Peek().pos.column);
    }
    scopes_.back()[decl.name] = decl.length;
  }

  std::optional<std::size_t> Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return f->second;
    }
    return std::nullopt;
  }

  // Token helpers.

  const Token& Peek() const { return tokens_[pos_]; }
  void Advance() {
    if (tokens_[pos_].kind != Token::Kind::kEnd) ++pos_;
  }
  bool AtEnd() const { return Peek().kind == Token::Kind::kEnd; }
  bool PeekPunct(std::string_view p) const {
    return Peek().kind == Token::Kind::kPunct && Peek().text == p;
  }
  bool PeekIdent(std::string_view word) const {
    return Peek().kind == Token::Kind::kIdent && Peek().text == word;
  }
  bool Accept(std::string_view text) {
    if (Peek().kind != Token::Kind::kEnd && Peek().kind != Token::Kind::kInt &&
        Peek().text == text) {
      Advance();
      return true;
    }
    return false;
  }
  void Expect(std::string_view text) {
    if (!Accept(text)) {
      throw Error(Peek(), "expected '" + std::string(text) + "', found '" +
                              Peek().text + "'");
    }
  }
  Token ExpectIdentToken() {
    const Token t = Peek();
    if (t.kind != Token::Kind::kIdent || IsKeyword(t.text)) {
      throw Error(t, "expected identifier, found '" + t.text + "'");
    }
    Advance();
    return t;
  }
  void ExpectEnd() {
    if (!AtEnd()) {
      throw Error(Peek(), "expected end of input, found '" + Peek().text + "'");
    }
  }

  static StmtPtr WithPos(StmtPtr s, const Token& at) {
    auto copy = std::make_shared<Stmt>(*s);
    copy->pos = at.pos;
    return copy;
  }

  static ParseError Error(const Token& at, const std::string& message) {
    return ParseError(message, at.pos.line, at.pos.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool allow_primed_;
  std::vector<std::map<std::string, std::size_t>> scopes_;
  std::map<std::string, std::int64_t> constant_values_;
  std::vector<std::pair<std::string, std::int64_t>> constants_;
  std::vector<VarDecl> space_vars_;
};

}  // namespace

Program ParseProgram(std::string_view text) {
  Parser parser(text, /*allow_primed=*/false);
  try {
    return parser.ParseProgramText();
  } catch (const ModelError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

CondPtr ParsePredicate(std::string_view text, const StateSpace& space,
                       bool allow_primed) {
  Parser parser(text, allow_primed);
  parser.DeclareSpace(space);
  return parser.ParseWholeCond();
}

ExprPtr ParseExpression(std::string_view text, const StateSpace& space,
                        bool allow_primed) {
  Parser parser(text, allow_primed);
  parser.DeclareSpace(space);
  return parser.ParseWholeExpr();
}

ExprPtr ParseExpression(std::string_view text, const Program& context) {
  Parser parser(text, /*allow_primed=*/false);
  parser.DeclareProgram(context);
  return parser.ParseWholeExpr();
}

}  // namespace relcor
