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

#ifndef PARITYLAB_GAME_HPP
#define PARITYLAB_GAME_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "core/index.hpp"

namespace paritylab {

using vertex_t = uint32_t;
using edge_t = uint32_t;

constexpr edge_t no_edge = std::numeric_limits<edge_t>::max();

enum class owner_t : uint8_t { eve = 0, adam = 1 };

inline char owner_letter(owner_t o) { return o == owner_t::eve ? 'E' : 'A'; }

struct game_edge {
    vertex_t src;
    vertex_t dst;
    priority_t priority;

    bool operator==(const game_edge&) const = default;
};

// Finite parity game with priorities on edges. Vertex ids are dense
// naturals 0..n-1. An owner-erased parity graph is the same structure
// with owners ignored (treated as Adam-only).
struct parity_game {
    priority_index index{0, 0};
    vertex_t initial = 0;
    std::vector<owner_t> owners;
    std::vector<game_edge> edges;
    std::vector<std::vector<edge_t>> out; // out-edge ids per vertex, insertion order

    vertex_t num_vertices() const { return static_cast<vertex_t>(owners.size()); }
    edge_t num_edges() const { return static_cast<edge_t>(edges.size()); }

    vertex_t add_vertex(owner_t o) {
        owners.push_back(o);
        out.emplace_back();
        return static_cast<vertex_t>(owners.size() - 1);
    }

    edge_t add_edge(vertex_t src, vertex_t dst, priority_t priority) {
        edge_t id = static_cast<edge_t>(edges.size());
        edges.push_back({src, dst, priority});
        out[src].push_back(id);
        return id;
    }

    // Throws input_error on a dead end, an out-of-index priority, a
    // dangling endpoint, or an out-of-range initial vertex.
    void validate() const;

    bool structurally_equal(const parity_game& other) const;
};

// An infinite eventually-periodic play in lasso form. Edges of `cycle`
// repeat forever after `prefix`; consecutive edges are incident.
struct play {
    std::vector<edge_t> prefix;
    std::vector<edge_t> cycle;
};

// Ground-truth evaluation: the limsup of the priority sequence of an
// eventually-periodic play is the maximum priority on its cycle part.
priority_t play_limsup(const parity_game& g, const play& p);

// Checks incidence of consecutive steps and non-emptiness of the cycle.
bool play_well_formed(const parity_game& g, const play& p, vertex_t start);

// Positional strategy: one chosen out-edge per vertex it is defined on.
struct strategy {
    std::vector<edge_t> choice; // indexed by vertex, no_edge where undefined

    explicit strategy(size_t n = 0) : choice(n, no_edge) {}
    bool defined(vertex_t v) const { return v < choice.size() && choice[v] != no_edge; }
};

struct solve_result {
    std::vector<bool> eve_wins; // per vertex; determinacy: adam region is the complement
    strategy eve_strategy;      // defined on Eve's vertices inside her region
    strategy adam_strategy;     // defined on Adam's vertices inside his region

    bool eve_wins_initial(const parity_game& g) const { return eve_wins[g.initial]; }
};

// Removes the unchosen edges at the given player's vertices. Vertices keep
// their ids; edge ids are reassigned. Throws input_error if the strategy is
// undefined at a reachable vertex of the player; unreachable undefined
// vertices keep all their edges.
parity_game restrict_by_strategy(const parity_game& g, const strategy& s, owner_t player);

// Cycle-parity checks on the owner-erased graph, by iterated SCC
// decomposition over priority-filtered subgraphs.
//
// find_bad_cycle_from: a lasso witness from `start` whose cycle maximum has
// parity `bad_parity` (0 = even, 1 = odd), or nullopt if none is reachable.
// find_bad_cycle_anywhere: the same without the reachability restriction,
// optionally limited to vertices enabled in `mask`.
std::optional<play> find_bad_cycle_from(const parity_game& g, vertex_t start, int bad_parity);
std::optional<play> find_bad_cycle_anywhere(const parity_game& g, int bad_parity,
                                            const std::vector<bool>* mask = nullptr);

struct even_check {
    bool even;                   // no reachable odd-dominated cycle
    std::optional<play> witness; // odd-dominated lasso when !even
};

// True iff every cycle reachable from g.initial has an even maximum.
even_check is_even_graph(const parity_game& g);

std::vector<bool> reachable_from(const parity_game& g, vertex_t start);

} // namespace paritylab

#endif
