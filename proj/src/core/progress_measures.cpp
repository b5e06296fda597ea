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

#include "core/errors.hpp"
#include "core/solve.hpp"

namespace paritylab {

namespace {

// Measures are tuples with one component per odd priority, most
// significant first (descending priority). Component p is capped by the
// number of p-labeled edges: a winning play cannot repeat a p-edge while
// p dominates, so the cap never blocks a winnable lift.
struct measure_space {
    std::vector<priority_t> odd_desc;
    std::vector<uint32_t> cap;

    explicit measure_space(const parity_game& g) {
        std::vector<priority_t> odds = g.index.odd_members();
        odd_desc.assign(odds.rbegin(), odds.rend());
        cap.assign(odd_desc.size(), 0);
        for (const game_edge& e : g.edges)
            if (is_odd(e.priority))
                cap[slot(e.priority)] += 1;
    }

    size_t slot(priority_t p) const {
        for (size_t i = 0; i < odd_desc.size(); ++i)
            if (odd_desc[i] == p)
                return i;
        throw internal_error("no measure slot for priority " + std::to_string(p));
    }

    // Number of components relevant to an edge of priority q: those for
    // odd priorities >= q.
    size_t prefix_len(priority_t q) const {
        size_t k = 0;
        while (k < odd_desc.size() && odd_desc[k] >= q)
            ++k;
        return k;
    }
};

struct lifter {
    const parity_game& g;
    measure_space space;
    size_t width;
    std::vector<uint32_t> value; // n * width, row per vertex
    std::vector<bool> top;
    std::vector<std::vector<vertex_t>> pred;

    explicit lifter(const parity_game& g_) : g(g_), space(g_) {
        width = space.odd_desc.size();
        value.assign(static_cast<size_t>(g.num_vertices()) * width, 0);
        top.assign(g.num_vertices(), false);
        pred.resize(g.num_vertices());
        for (const game_edge& e : g.edges)
            pred[e.dst].push_back(e.src);
    }

    const uint32_t* row(vertex_t v) const { return value.data() + static_cast<size_t>(v) * width; }

    // prog = least measure m with m >=_q mu(w), strictly when q is odd.
    // Returns false when the result is top.
    bool prog(edge_t eid, std::vector<uint32_t>& out) const {
        const game_edge& e = g.edges[eid];
        if (top[e.dst])
            return false;
        size_t k = space.prefix_len(e.priority);
        const uint32_t* w = row(e.dst);
        std::fill(out.begin(), out.end(), 0);
        std::copy(w, w + k, out.begin());
        if (is_even(e.priority))
            return true;
        // Strict increase on the prefix: carry upward from the least
        // significant relevant component.
        for (size_t i = k; i-- > 0;) {
            if (out[i] < space.cap[i]) {
                out[i] += 1;
                std::fill(out.begin() + static_cast<long>(i) + 1, out.begin() + static_cast<long>(k), 0u);
                return true;
            }
        }
        return false; // all relevant components saturated
    }

    // -1 / 0 / 1 comparison of full tuples (descending significance).
    int cmp(const uint32_t* a, const std::vector<uint32_t>& b) const {
        for (size_t i = 0; i < width; ++i) {
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    void run() {
        std::deque<vertex_t> todo;
        std::vector<bool> dirty(g.num_vertices(), true);
        for (vertex_t v = 0; v < g.num_vertices(); ++v)
            todo.push_back(v);
        std::vector<uint32_t> best(width), cur(width);
        while (!todo.empty()) {
            vertex_t v = todo.front();
            todo.pop_front();
            dirty[v] = false;
            if (top[v])
                continue;
            bool eve = g.owners[v] == owner_t::eve;
            bool best_top = eve; // min over edges for Eve, max for Adam
            bool have = false;
            for (edge_t eid : g.out[v]) {
                bool fin = prog(eid, cur);
                if (eve) {
                    if (fin && (!have || best_top || cmp(best.data(), cur) > 0)) {
                        best = cur;
                        best_top = false;
                    }
                    have = true;
                } else {
                    if (!fin) {
                        best_top = true;
                    } else if (!best_top && (!have || cmp(best.data(), cur) < 0)) {
                        best = cur;
                    }
                    have = true;
                }
            }
            bool lifted = false;
            if (best_top) {
                top[v] = true;
                lifted = true;
            } else if (cmp(row(v), best) < 0) {
                std::copy(best.begin(), best.end(), value.begin() + static_cast<size_t>(v) * width);
                lifted = true;
            }
            if (lifted)
                for (vertex_t u : pred[v])
                    if (!dirty[u] && !top[u]) {
                        dirty[u] = true;
                        todo.push_back(u);
                    }
        }
    }

    // Winning choice for Eve at v: the edge with the least prog value.
    edge_t best_edge(vertex_t v) const {
        edge_t best_id = no_edge;
        std::vector<uint32_t> best(width), cur(width);
        bool have = false;
        for (edge_t eid : g.out[v]) {
            if (!prog(eid, cur))
                continue;
            if (!have || cmp(best.data(), cur) > 0) {
                best = cur;
                best_id = eid;
                have = true;
            }
        }
        return best_id;
    }
};

parity_game dual_of(const parity_game& g) {
    parity_game d;
    d.index = priority_index(g.index.lo + 1, g.index.hi + 1);
    d.initial = g.initial;
    d.owners.resize(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
        d.owners[v] = g.owners[v] == owner_t::eve ? owner_t::adam : owner_t::eve;
    d.out.resize(g.num_vertices());
    for (const game_edge& e : g.edges)
        d.add_edge(e.src, e.dst, e.priority + 1);
    return d;
}

} // namespace

solve_result solve_progress_measures(const parity_game& g) {
    g.validate();
    lifter primal(g);
    primal.run();

    parity_game d = dual_of(g);
    lifter dual(d);
    dual.run();

    solve_result r;
    r.eve_wins.resize(g.num_vertices());
    r.eve_strategy = strategy(g.num_vertices());
    r.adam_strategy = strategy(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        bool eve = !primal.top[v];
        bool adam = !dual.top[v];
        if (eve == adam)
            throw internal_error("progress measures: primal and dual disagree at vertex " +
                                 std::to_string(v));
        r.eve_wins[v] = eve;
        if (eve && g.owners[v] == owner_t::eve)
            r.eve_strategy.choice[v] = primal.best_edge(v);
        if (!eve && g.owners[v] == owner_t::adam)
            r.adam_strategy.choice[v] = dual.best_edge(v);
    }
    return r;
}

} // namespace paritylab
