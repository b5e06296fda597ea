/*
 * Copyright 2026 the paritylab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PARITYLAB_SOLVE_HPP
#define PARITYLAB_SOLVE_HPP

#include "core/game.hpp"

namespace paritylab {

enum class solver_kind { zielonka, progress_measures };

// Recursive attractor decomposition. Deterministic: attractor insertion and
// strategy choices tie-break on the lowest id.
solve_result solve_zielonka(const parity_game& g);

// Small-progress-measure lifting; an independent algorithm used to
// cross-validate solve_zielonka. Adam's side comes from lifting the dual
// game (owners swapped, priorities shifted by one).
solve_result solve_progress_measures(const parity_game& g);

solve_result solve(const parity_game& g, solver_kind kind);

// Winning-strategy soundness: restrict the player's vertices to the
// strategy, then demand that no cycle within the player's region is
// dominated by the opposing parity. Returns an offending lasso if any.
std::optional<play> strategy_unsound_witness(const parity_game& g, const solve_result& r,
                                             owner_t player);

} // namespace paritylab

#endif
