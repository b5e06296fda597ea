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

#ifndef PARITYLAB_ACCEPTANCE_HPP
#define PARITYLAB_ACCEPTANCE_HPP

#include <optional>
#include <unordered_map>

#include "core/automata.hpp"
#include "core/game.hpp"
#include "core/solve.hpp"

namespace paritylab {

struct ag_vertex {
    bool is_state;           // true: (node, state) Eve vertex; false: (node, transition)
    uint32_t tree_node;
    uint32_t state_or_trans;
};

struct acceptance_game_result {
    parity_game game;
    std::vector<ag_vertex> vertices;
    std::unordered_map<uint64_t, vertex_t> state_vertex; // (node << 32 | state) -> vertex

    vertex_t vertex_of(uint32_t node, uint32_t state) const {
        return state_vertex.at((static_cast<uint64_t>(node) << 32) | state);
    }
};

// Product of automaton and tree: Eve resolves nondeterminism at (node,
// state) pairs with neutral priority index.lo, Adam picks a direction at
// (node, transition) pairs with that direction's priority.
acceptance_game_result acceptance_game(const tree_automaton& a, const regular_tree& t);

bool membership(const tree_automaton& a, const regular_tree& t);

struct emptiness_result {
    bool empty;
    std::optional<regular_tree> witness; // accepted tree when non-empty
};

// Emptiness game: Eve additionally chooses letters; a positional winning
// strategy folds into a regular witness tree.
emptiness_result is_empty(const tree_automaton& a);

// Finite presentation of a run: nodes labeled with transition ids, with
// their per-direction priorities denormalized.
struct regular_run {
    priority_index index{0, 0}; // automaton index, carried for projection
    std::vector<uint32_t> labels;
    std::vector<priority_t> p0, p1;
    std::vector<uint32_t> succ0, succ1;
    uint32_t root = 0;

    uint32_t num_nodes() const { return static_cast<uint32_t>(labels.size()); }
    uint32_t succ(uint32_t node, int dir) const { return dir == 0 ? succ0[node] : succ1[node]; }
};

// The run induced by a positional Eve strategy on acceptance_game(a, t);
// nodes are the (tree node, state) pairs reachable under the strategy.
regular_run run_game(const tree_automaton& a, const regular_tree& t, const strategy& s);

// Root from the initial state, successors along the labeled transitions.
void validate_run(const tree_automaton& a, const regular_run& r);

// Adam-only parity graph over run nodes. Edge ids are fixed: node v owns
// edges 2v (direction 0) and 2v+1 (direction 1).
parity_game project_priorities(const regular_run& r);

} // namespace paritylab

#endif
