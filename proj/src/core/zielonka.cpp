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

#include <algorithm>
#include <deque>

#include "core/solve.hpp"

namespace paritylab {

namespace {

// The solver runs on a node-labeled view of the edge-labeled game: every
// edge becomes an intermediate node carrying its priority, original
// vertices carry the neutral priority index.lo. Plays correspond one to
// one and keep their limsup, since index.lo never exceeds any edge
// priority.
struct arena {
    uint32_t n_orig;
    uint32_t n; // n_orig + #edges
    std::vector<priority_t> pri;
    std::vector<owner_t> owner;
    std::vector<std::vector<uint32_t>> succ;
    std::vector<std::vector<uint32_t>> pred;

    explicit arena(const parity_game& g) {
        n_orig = g.num_vertices();
        n = n_orig + g.num_edges();
        pri.resize(n);
        owner.resize(n);
        succ.resize(n);
        pred.resize(n);
        for (vertex_t v = 0; v < n_orig; ++v) {
            pri[v] = g.index.lo;
            owner[v] = g.owners[v];
        }
        for (edge_t e = 0; e < g.num_edges(); ++e) {
            uint32_t mid = n_orig + e;
            pri[mid] = g.edges[e].priority;
            owner[mid] = owner_t::adam; // irrelevant, single successor
        }
        for (vertex_t v = 0; v < n_orig; ++v)
            for (edge_t e : g.out[v]) {
                uint32_t mid = n_orig + e;
                succ[v].push_back(mid);
                pred[mid].push_back(v);
                succ[mid].push_back(g.edges[e].dst);
                pred[g.edges[e].dst].push_back(mid);
            }
    }
};

struct zlk {
    const arena& a;
    std::vector<int> winner;       // node -> 0 (Eve) / 1 (Adam)
    std::vector<uint32_t> strat;   // node -> chosen successor node
    std::vector<uint32_t> scratch; // successor counters for attractors

    static constexpr uint32_t none = UINT32_MAX;

    explicit zlk(const arena& a_)
        : a(a_), winner(a_.n, -1), strat(a_.n, none), scratch(a_.n, 0) {}

    // sigma-attractor of `targets` inside `alive`. Fills `attr` (including
    // the targets) and records sigma's pull edges in strat for attracted
    // sigma nodes outside the target set.
    void attract(int sigma, const std::vector<uint32_t>& targets,
                 const std::vector<bool>& alive, std::vector<bool>& attr) {
        for (uint32_t v = 0; v < a.n; ++v)
            if (alive[v])
                scratch[v] = static_cast<uint32_t>(count_alive_succ(v, alive));
        std::deque<uint32_t> queue(targets.begin(), targets.end());
        for (uint32_t t : targets)
            attr[t] = true;
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (uint32_t u : a.pred[v]) {
                if (!alive[u] || attr[u])
                    continue;
                if (static_cast<int>(a.owner[u]) == sigma) {
                    attr[u] = true;
                    strat[u] = v;
                    queue.push_back(u);
                } else if (--scratch[u] == 0) {
                    attr[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }

    size_t count_alive_succ(uint32_t v, const std::vector<bool>& alive) const {
        size_t k = 0;
        for (uint32_t w : a.succ[v])
            if (alive[w])
                ++k;
        return k;
    }

    uint32_t first_alive_succ(uint32_t v, const std::vector<bool>& alive) const {
        uint32_t best = none;
        for (uint32_t w : a.succ[v])
            if (alive[w] && w < best)
                best = w;
        return best;
    }

    // Solves the subgame on `alive`, writing winner and strat for every
    // alive node. The opponent-attractor branch iterates in place, so
    // recursion depth is bounded by the number of distinct priorities.
    void run(std::vector<bool> alive, size_t n_alive) {
        while (n_alive > 0) {
            priority_t h = 0;
            bool any = false;
            for (uint32_t v = 0; v < a.n; ++v)
                if (alive[v] && (!any || a.pri[v] > h)) {
                    h = a.pri[v];
                    any = true;
                }
            int sigma = static_cast<int>(h & 1u);

            std::vector<uint32_t> tops;
            for (uint32_t v = 0; v < a.n; ++v)
                if (alive[v] && a.pri[v] == h)
                    tops.push_back(v);

            std::vector<bool> attr(a.n, false);
            attract(sigma, tops, alive, attr);

            std::vector<bool> sub = alive;
            size_t n_sub = n_alive;
            for (uint32_t v = 0; v < a.n; ++v)
                if (attr[v] && sub[v]) {
                    sub[v] = false;
                    --n_sub;
                }
            run(sub, n_sub);

            bool opp_nonempty = false;
            for (uint32_t v = 0; v < a.n && !opp_nonempty; ++v)
                if (sub[v] && winner[v] != sigma)
                    opp_nonempty = true;

            if (!opp_nonempty) {
                // sigma wins the whole subgame: attractor strategy on the
                // pull region, any alive move at the top nodes.
                for (uint32_t v = 0; v < a.n; ++v)
                    if (alive[v]) {
                        winner[v] = sigma;
                        if (a.pri[v] == h && static_cast<int>(a.owner[v]) == sigma)
                            strat[v] = first_alive_succ(v, alive);
                    }
                return;
            }

            // The opponent keeps their sub-region plus its attractor; strip
            // it and resolve the rest in the next iteration.
            std::vector<uint32_t> opp_targets;
            for (uint32_t v = 0; v < a.n; ++v)
                if (sub[v] && winner[v] != sigma)
                    opp_targets.push_back(v);
            std::vector<bool> battr(a.n, false);
            attract(1 - sigma, opp_targets, alive, battr);
            for (uint32_t v = 0; v < a.n; ++v)
                if (battr[v]) {
                    winner[v] = 1 - sigma;
                    // Strategy: recursion result inside the opponent
                    // sub-region, pull edges (already in strat) elsewhere.
                    alive[v] = false;
                    --n_alive;
                }
        }
    }
};

} // namespace

solve_result solve_zielonka(const parity_game& g) {
    g.validate();
    arena a(g);
    zlk solver(a);
    solver.run(std::vector<bool>(a.n, true), a.n);

    solve_result r;
    r.eve_wins.resize(g.num_vertices());
    r.eve_strategy = strategy(g.num_vertices());
    r.adam_strategy = strategy(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        bool eve = solver.winner[v] == 0;
        r.eve_wins[v] = eve;
        bool mine = (g.owners[v] == owner_t::eve) == eve;
        if (mine && solver.strat[v] != zlk::none) {
            edge_t e = solver.strat[v] - a.n_orig;
            (g.owners[v] == owner_t::eve ? r.eve_strategy : r.adam_strategy).choice[v] = e;
        }
    }
    return r;
}

solve_result solve(const parity_game& g, solver_kind kind) {
    return kind == solver_kind::zielonka ? solve_zielonka(g) : solve_progress_measures(g);
}

std::optional<play> strategy_unsound_witness(const parity_game& g, const solve_result& r,
                                             owner_t player) {
    // Check inside the player's region only; the opposing region never
    // constrains the player's strategy.
    strategy padded = (player == owner_t::eve) ? r.eve_strategy : r.adam_strategy;
    padded.choice.resize(g.num_vertices(), no_edge);
    parity_game h;
    h.index = g.index;
    h.initial = g.initial;
    h.owners = g.owners;
    h.out.resize(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        if (g.owners[v] == player && padded.choice[v] != no_edge) {
            const game_edge& e = g.edges[padded.choice[v]];
            h.add_edge(e.src, e.dst, e.priority);
        } else {
            for (edge_t eid : g.out[v])
                h.add_edge(g.edges[eid].src, g.edges[eid].dst, g.edges[eid].priority);
        }
    }
    std::vector<bool> region(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
        region[v] = (player == owner_t::eve) ? r.eve_wins[v] : !r.eve_wins[v];
    int bad_parity = (player == owner_t::eve) ? 1 : 0;
    return find_bad_cycle_anywhere(h, bad_parity, &region);
}

} // namespace paritylab
