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

#ifndef PARITYLAB_GENERATORS_HPP
#define PARITYLAB_GENERATORS_HPP

#include "core/automata.hpp"
#include "core/game.hpp"
#include "core/guidance.hpp"

namespace paritylab {

// Seeded generator parameters; identical specs reproduce identical
// artifacts byte for byte.
struct gen_spec {
    uint64_t seed = 1;
    uint32_t size = 8;              // vertices / states / nodes
    priority_index index{0, 2};
    uint32_t out_degree = 2;        // max out-degree / transitions per (state, letter)
    std::vector<std::string> alphabet{"a", "b"};
};

parity_game gen_game(const gen_spec& spec);

// Adam-only lasso whose cycle maximum has the requested parity
// (0 even / 1 odd). Throws input_error when the index has no priority of
// that parity.
parity_game gen_lasso(const gen_spec& spec, int parity);

tree_automaton gen_automaton(const gen_spec& spec);

regular_tree gen_tree(const gen_spec& spec);

// B is generated first (retrying derived seeds until non-empty), A is a
// state quotient of B keeping the transition priorities, and the guiding
// function maps each (A-state, B-transition) to the quotient image when
// the states align, otherwise to the first compatible A-transition.
// Compatibility and preservation hold by construction. The corpus holds
// trees accepted by B (the emptiness witness plus filtered random trees).
struct guided_pair {
    tree_automaton a;
    tree_automaton b;
    guiding_function guide;
    std::vector<regular_tree> corpus;
};

guided_pair gen_guided_pair(const gen_spec& spec, uint32_t a_states = 0);

} // namespace paritylab

#endif
