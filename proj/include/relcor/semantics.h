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

// Program functions computed compositionally over the finite state space.

#ifndef RELCOR_SEMANTICS_H
#define RELCOR_SEMANTICS_H

#include "relcor/ast.h"
#include "relcor/relation.h"

namespace relcor {

// The relation defined by `program` over its declared space, with exact-mode
// arithmetic. Loops are the closure of the guarded body restricted to final
// states where the guard is false. Block locals are projected away over both
// their initial and final values. Throws CapacityError when a frame (the
// space extended by the locals in scope) exceeds `limits`.
Relation Denote(const Program& program, const Limits& limits = {});

}  // namespace relcor

#endif  // RELCOR_SEMANTICS_H
