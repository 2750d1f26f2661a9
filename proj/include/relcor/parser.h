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

// Concrete syntax (`.imp` files):
//
//   const N = 3;                      named constant
//   int<0..2> a[N+1];                 state variable (array of N+1 elements)
//   int<0..6> x = 0;                  state variable plus an initial assignment
//   int n, y;                         unranged: the full 32-bit interval
//   x = x + a[i];  a[i] = 1;  skip;  abort;
//   if (c) { ... } else { ... }
//   while (c) { ... }
//   { int<0..9> t; ... }              block with a local variable
//
// Top-level declarations form the program's state space, in order. A
// declaration inside braces opens a block scoping the rest of the braces.
// Line comments start with `//`, block comments are `/* ... */`.

#ifndef RELCOR_PARSER_H
#define RELCOR_PARSER_H

#include <string_view>

#include "relcor/ast.h"

namespace relcor {

// Throws ParseError (with line and column) on syntax errors and on
// references to undeclared variables.
Program ParseProgram(std::string_view text);

// Parses a boolean predicate over `space`. When `allow_primed`, `x'` refers
// to the output value of `x`.
CondPtr ParsePredicate(std::string_view text, const StateSpace& space,
                       bool allow_primed);

ExprPtr ParseExpression(std::string_view text, const StateSpace& space,
                        bool allow_primed);

// Parses an expression that may use the constants, state variables and
// block locals of `context`, e.g. a replacement for one of its sites.
ExprPtr ParseExpression(std::string_view text, const Program& context);

}  // namespace relcor

#endif  // RELCOR_PARSER_H
