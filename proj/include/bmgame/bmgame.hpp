// Copyright 2026 The bmgame Authors
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

#ifndef BMGAME_BMGAME_HPP
#define BMGAME_BMGAME_HPP

#include "bmgame/error.hpp"
#include "bmgame/game.hpp"
#include "bmgame/instance.hpp"
#include "bmgame/instance_io.hpp"
#include "bmgame/knapsack.hpp"
#include "bmgame/rational.hpp"
#include "bmgame/reductions.hpp"
#include "bmgame/star_analysis.hpp"
#include "bmgame/transport_solver.hpp"

#endif  // BMGAME_BMGAME_HPP
