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

#include "core/game.hpp"

#include <algorithm>
#include <deque>

#include "core/errors.hpp"

namespace paritylab {

void parity_game::validate() const {
    if (owners.empty())
        throw input_error("game has no vertices");
    if (initial >= num_vertices())
        throw input_error("initial vertex " + std::to_string(initial) + " out of range");
    for (vertex_t v = 0; v < num_vertices(); ++v)
        if (out[v].empty())
            throw input_error("vertex " + std::to_string(v) + " has no outgoing edge");
    for (const game_edge& e : edges) {
        if (e.src >= num_vertices() || e.dst >= num_vertices())
            throw input_error("edge references undeclared vertex " +
                              std::to_string(e.src >= num_vertices() ? e.src : e.dst));
        if (!index.contains(e.priority))
            throw input_error("edge priority " + std::to_string(e.priority) +
                              " outside index " + index.str());
    }
}

bool parity_game::structurally_equal(const parity_game& other) const {
    return index == other.index && initial == other.initial && owners == other.owners &&
           edges == other.edges && out == other.out;
}

priority_t play_limsup(const parity_game& g, const play& p) {
    if (p.cycle.empty())
        throw input_error("play has an empty cycle part");
    priority_t m = 0;
    for (edge_t e : p.cycle)
        m = std::max(m, g.edges[e].priority);
    return m;
}

bool play_well_formed(const parity_game& g, const play& p, vertex_t start) {
    if (p.cycle.empty())
        return false;
    vertex_t at = start;
    for (edge_t e : p.prefix) {
        if (e >= g.num_edges() || g.edges[e].src != at)
            return false;
        at = g.edges[e].dst;
    }
    vertex_t cycle_head = at;
    for (edge_t e : p.cycle) {
        if (e >= g.num_edges() || g.edges[e].src != at)
            return false;
        at = g.edges[e].dst;
    }
    return at == cycle_head;
}

std::vector<bool> reachable_from(const parity_game& g, vertex_t start) {
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<vertex_t> queue;
    seen[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
        vertex_t v = queue.front();
        queue.pop_front();
        for (edge_t e : g.out[v]) {
            vertex_t w = g.edges[e].dst;
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

parity_game restrict_by_strategy(const parity_game& g, const strategy& s, owner_t player) {
    std::vector<bool> reach = reachable_from(g, g.initial);
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
        if (g.owners[v] == player && reach[v] && !s.defined(v))
            throw input_error("strategy undefined at reachable vertex " + std::to_string(v));

    parity_game r;
    r.index = g.index;
    r.initial = g.initial;
    r.owners = g.owners;
    r.out.resize(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        if (g.owners[v] == player && s.defined(v)) {
            const game_edge& e = g.edges[s.choice[v]];
            if (e.src != v)
                throw input_error("strategy at vertex " + std::to_string(v) +
                                  " picks a non-outgoing edge");
            r.add_edge(e.src, e.dst, e.priority);
        } else {
            for (edge_t eid : g.out[v]) {
                const game_edge& e = g.edges[eid];
                r.add_edge(e.src, e.dst, e.priority);
            }
        }
    }
    return r;
}

namespace {

// Tarjan SCC over a filtered edge set. Deterministic: vertices and edges
// are visited in ascending id order.
struct scc_decomposition {
    const parity_game& g;
    const std::vector<bool>& edge_alive;
    const std::vector<bool>& vertex_alive;

    std::vector<int> comp;       // vertex -> component id, -1 if not alive
    std::vector<uint32_t> low, num;
    std::vector<vertex_t> stack;
    std::vector<bool> on_stack;
    uint32_t counter = 0;
    int n_comps = 0;

    scc_decomposition(const parity_game& g_, const std::vector<bool>& ea,
                      const std::vector<bool>& va)
        : g(g_), edge_alive(ea), vertex_alive(va),
          comp(g_.num_vertices(), -1), low(g_.num_vertices(), 0),
          num(g_.num_vertices(), 0), on_stack(g_.num_vertices(), false) {
        for (vertex_t v = 0; v < g.num_vertices(); ++v)
            if (vertex_alive[v] && num[v] == 0)
                visit(v);
    }

    // Iterative DFS: recursion depth would scale with expanded game sizes.
    void visit(vertex_t root) {
        struct frame {
            vertex_t v;
            size_t next_out;
        };
        std::vector<frame> frames{{root, 0}};
        num[root] = low[root] = ++counter;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            frame& f = frames.back();
            if (f.next_out < g.out[f.v].size()) {
                edge_t eid = g.out[f.v][f.next_out++];
                if (!edge_alive[eid])
                    continue;
                vertex_t w = g.edges[eid].dst;
                if (!vertex_alive[w])
                    continue;
                if (num[w] == 0) {
                    num[w] = low[w] = ++counter;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                vertex_t v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == num[v]) {
                    int c = n_comps++;
                    while (true) {
                        vertex_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = c;
                        if (w == v)
                            break;
                    }
                }
            }
        }
    }
};

// BFS path src -> dst using only alive edges whose endpoints satisfy
// `ok(vertex)`. Returns edge ids; empty when src == dst.
std::vector<edge_t> bfs_path(const parity_game& g, vertex_t src, vertex_t dst,
                             const std::vector<bool>& edge_alive,
                             const std::vector<int>& comp, int want_comp) {
    std::vector<edge_t> via(g.num_vertices(), no_edge);
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<vertex_t> queue;
    seen[src] = true;
    queue.push_back(src);
    while (!queue.empty() && !seen[dst]) {
        vertex_t v = queue.front();
        queue.pop_front();
        for (edge_t eid : g.out[v]) {
            if (!edge_alive[eid])
                continue;
            vertex_t w = g.edges[eid].dst;
            if (want_comp >= 0 && comp[w] != want_comp)
                continue;
            if (!seen[w]) {
                seen[w] = true;
                via[w] = eid;
                queue.push_back(w);
            }
        }
    }
    std::vector<edge_t> path;
    if (!seen[dst])
        return path; // caller guarantees reachability; src == dst gives empty
    for (vertex_t at = dst; at != src; at = g.edges[via[at]].src)
        path.push_back(via[at]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Searches a cycle whose maximal edge priority has the requested parity,
// looking only inside the subgraph given by the alive masks. Peels the
// maximal priority off SCCs until a cycle of the bad parity shows up or
// everything is acyclic.
std::optional<play> bad_cycle_in(const parity_game& g, int bad_parity,
                                 std::vector<bool> edge_alive, std::vector<bool> vertex_alive) {
    while (true) {
        scc_decomposition sccs(g, edge_alive, vertex_alive);
        bool peeled = false;
        for (int c = 0; c < sccs.n_comps; ++c) {
            bool has_internal = false;
            priority_t max_pri = 0;
            edge_t max_edge = no_edge;
            for (edge_t eid = 0; eid < g.num_edges(); ++eid) {
                if (!edge_alive[eid])
                    continue;
                const game_edge& e = g.edges[eid];
                if (!vertex_alive[e.src] || sccs.comp[e.src] != c || sccs.comp[e.dst] != c)
                    continue;
                if (!has_internal || e.priority > max_pri) {
                    has_internal = true;
                    max_pri = e.priority;
                    max_edge = eid;
                }
            }
            if (!has_internal)
                continue;
            if (static_cast<int>(max_pri & 1u) == bad_parity) {
                // A cycle through max_edge inside this SCC has maximum
                // exactly max_pri, of the bad parity.
                const game_edge& e = g.edges[max_edge];
                play p;
                p.cycle.push_back(max_edge);
                std::vector<edge_t> back = bfs_path(g, e.dst, e.src, edge_alive, sccs.comp, c);
                p.cycle.insert(p.cycle.end(), back.begin(), back.end());
                return p;
            }
            // Maximum has the good parity: any bad cycle avoids all its
            // occurrences. Drop those edges and re-decompose.
            for (edge_t eid = 0; eid < g.num_edges(); ++eid) {
                if (!edge_alive[eid])
                    continue;
                const game_edge& e = g.edges[eid];
                if (vertex_alive[e.src] && sccs.comp[e.src] == c && sccs.comp[e.dst] == c &&
                    e.priority == max_pri) {
                    edge_alive[eid] = false;
                    peeled = true;
                }
            }
        }
        if (!peeled)
            return std::nullopt;
    }
}

} // namespace

std::optional<play> find_bad_cycle_from(const parity_game& g, vertex_t start, int bad_parity) {
    std::vector<bool> reach = reachable_from(g, start);
    std::vector<bool> edge_alive(g.num_edges(), false);
    for (edge_t eid = 0; eid < g.num_edges(); ++eid)
        if (reach[g.edges[eid].src])
            edge_alive[eid] = true;
    std::optional<play> cyc = bad_cycle_in(g, bad_parity, edge_alive, reach);
    if (!cyc)
        return std::nullopt;
    // Prepend the access path from start to the cycle head.
    vertex_t head = g.edges[cyc->cycle.front()].src;
    std::vector<bool> all_edges(g.num_edges(), true);
    std::vector<int> dummy;
    cyc->prefix = bfs_path(g, start, head, all_edges, dummy, -1);
    return cyc;
}

std::optional<play> find_bad_cycle_anywhere(const parity_game& g, int bad_parity,
                                            const std::vector<bool>* mask) {
    std::vector<bool> vertex_alive = mask ? *mask : std::vector<bool>(g.num_vertices(), true);
    std::vector<bool> edge_alive(g.num_edges(), false);
    for (edge_t eid = 0; eid < g.num_edges(); ++eid)
        if (vertex_alive[g.edges[eid].src] && vertex_alive[g.edges[eid].dst])
            edge_alive[eid] = true;
    return bad_cycle_in(g, bad_parity, edge_alive, vertex_alive);
}

even_check is_even_graph(const parity_game& g) {
    std::optional<play> w = find_bad_cycle_from(g, g.initial, 1);
    return {!w.has_value(), std::move(w)};
}

} // namespace paritylab
