// Copyright 2026 The Conga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONGA_SOLVERS_ENUM1_H_
#define CONGA_SOLVERS_ENUM1_H_

#include "conga/game/game.h"
#include "conga/solvers/solve.h"

namespace conga {

// The unpruned baseline: every profile, in lexicographic order, is tested
// with IsNash. stats.candidates is the number of profiles visited.
SolveResult SolveEnum1(const Game& game, const SolveControl& control = {});

}  // namespace conga

#endif  // CONGA_SOLVERS_ENUM1_H_
